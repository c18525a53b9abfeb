#include "wtss/wtg.hpp"

#include <charconv>
#include <set>
#include <sstream>
#include <vector>

namespace wtss {

namespace {

struct Token {
    std::string_view text;
    int column;
};

std::vector<Token> tokenize(std::string_view line) {
    if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    std::vector<Token> tokens;
    std::size_t i = 0;
    while (i < line.size()) {
        while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
        std::size_t start = i;
        while (i < line.size() && line[i] != ' ' && line[i] != '\t' && line[i] != '\r') ++i;
        if (i > start) tokens.push_back({line.substr(start, i - start), static_cast<int>(start) + 1});
    }
    return tokens;
}

class LineReader {
public:
    LineReader(int line, std::vector<Token> tokens) : line_(line), tokens_(std::move(tokens)) {}

    [[noreturn]] void fail(int column, const std::string& message) const {
        throw WtgParseError(line_, column, message);
    }
    [[noreturn]] void fail_at(std::size_t index, const std::string& message) const {
        fail(index < tokens_.size() ? tokens_[index].column : end_column(), message);
    }

    void expect_arity(std::size_t count) const {
        if (tokens_.size() < count) fail_at(tokens_.size(), "expected " + std::to_string(count - 1) + " field(s) after '" + std::string(tokens_[0].text) + "'");
        if (tokens_.size() > count) fail_at(count, "unexpected trailing field '" + std::string(tokens_[count].text) + "'");
    }

    [[nodiscard]] std::string_view word(std::size_t index) const { return tokens_[index].text; }

    [[nodiscard]] std::int64_t integer(std::size_t index) const {
        auto text = tokens_[index].text;
        std::int64_t value = 0;
        auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
        if (ec != std::errc{} || ptr != text.data() + text.size()) {
            fail_at(index, "expected an integer, found '" + std::string(text) + "'");
        }
        return value;
    }

    [[nodiscard]] Rational rational(std::size_t index) const {
        auto text = tokens_[index].text;
        try {
            return Rational::parse(text);
        } catch (const std::domain_error&) {
            fail_at(index, "zero denominator in '" + std::string(text) + "'");
        } catch (const std::overflow_error&) {
            fail_at(index, "number out of range '" + std::string(text) + "'");
        } catch (const std::invalid_argument&) {
            fail_at(index, "malformed number '" + std::string(text) + "'");
        }
    }

    [[nodiscard]] int line() const { return line_; }

private:
    [[nodiscard]] int end_column() const {
        if (tokens_.empty()) return 1;
        const auto& last = tokens_.back();
        return last.column + static_cast<int>(last.text.size());
    }

    int line_;
    std::vector<Token> tokens_;
};

template <typename Fn>
void for_each_record(std::string_view text, Fn&& fn) {
    int line_no = 0;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        auto end = text.find('\n', pos);
        if (end == std::string_view::npos) end = text.size();
        ++line_no;
        auto tokens = tokenize(text.substr(pos, end - pos));
        if (!tokens.empty()) fn(LineReader(line_no, std::move(tokens)));
        if (end == text.size()) break;
        pos = end + 1;
    }
}

void read_incentive(const LineReader& r, int n, std::vector<Rational>& values, std::vector<char>& seen) {
    r.expect_arity(3);
    auto id = r.integer(1);
    if (id < 1 || id > n) r.fail_at(1, "unknown vertex " + std::to_string(id));
    if (seen[id]) r.fail_at(1, "duplicate incentive for vertex " + std::to_string(id));
    auto value = r.rational(2);
    if (value.is_negative()) r.fail_at(2, "negative incentive " + value.to_string());
    seen[id] = 1;
    values[id - 1] = value;
}

}  // namespace

WtgDocument parse_wtg(std::string_view text) {
    enum class Stage { version, mode, count, body };
    Stage stage = Stage::version;
    Mode mode = Mode::undirected;
    int n = 0;
    int last_line = 1;
    std::vector<Rational> tau;
    std::vector<int> tau_line;
    std::vector<Edge> edges;
    std::set<std::pair<Vertex, Vertex>> edge_keys;
    std::vector<Rational> incentives;
    std::vector<char> has_incentive;
    bool any_incentive = false;

    for_each_record(text, [&](const LineReader& r) {
        last_line = r.line();
        const auto keyword = r.word(0);
        switch (stage) {
            case Stage::version:
                if (keyword != "wtg") r.fail_at(0, "expected header 'wtg 1'");
                r.expect_arity(2);
                if (r.integer(1) != 1) r.fail_at(1, "unsupported format version");
                stage = Stage::mode;
                return;
            case Stage::mode:
                if (keyword != "mode") r.fail_at(0, "expected 'mode undirected|directed'");
                r.expect_arity(2);
                if (r.word(1) == "undirected") {
                    mode = Mode::undirected;
                } else if (r.word(1) == "directed") {
                    mode = Mode::directed;
                } else {
                    r.fail_at(1, "unknown mode '" + std::string(r.word(1)) + "'");
                }
                stage = Stage::count;
                return;
            case Stage::count: {
                if (keyword != "n") r.fail_at(0, "expected 'n <count>'");
                r.expect_arity(2);
                auto count = r.integer(1);
                if (count < 1 || count > 1'000'000) r.fail_at(1, "vertex count must be in [1, 1000000]");
                n = static_cast<int>(count);
                tau.assign(static_cast<std::size_t>(n), Rational(0));
                tau_line.assign(static_cast<std::size_t>(n) + 1, 0);
                incentives.assign(static_cast<std::size_t>(n), Rational(0));
                has_incentive.assign(static_cast<std::size_t>(n) + 1, 0);
                stage = Stage::body;
                return;
            }
            case Stage::body: break;
        }
        if (keyword == "v") {
            r.expect_arity(3);
            auto id = r.integer(1);
            if (id < 1 || id > n) r.fail_at(1, "unknown vertex " + std::to_string(id));
            if (tau_line[id] != 0) r.fail_at(1, "duplicate vertex " + std::to_string(id));
            auto t = r.rational(2);
            if (t.is_negative()) r.fail_at(2, "negative threshold " + t.to_string());
            tau[id - 1] = t;
            tau_line[id] = r.line();
        } else if (keyword == "e") {
            r.expect_arity(4);
            auto u = r.integer(1);
            auto v = r.integer(2);
            if (u < 1 || u > n) r.fail_at(1, "unknown vertex " + std::to_string(u));
            if (v < 1 || v > n) r.fail_at(2, "unknown vertex " + std::to_string(v));
            if (u == v) r.fail_at(1, "self-loop on vertex " + std::to_string(u));
            auto w = r.rational(3);
            if (w.is_negative()) r.fail_at(3, "negative weight " + w.to_string());
            std::pair<Vertex, Vertex> key{static_cast<Vertex>(u), static_cast<Vertex>(v)};
            if (mode == Mode::undirected && key.first > key.second) std::swap(key.first, key.second);
            if (!edge_keys.insert(key).second) {
                r.fail_at(1, "duplicate edge (" + std::to_string(u) + "," + std::to_string(v) + ")");
            }
            edges.push_back({static_cast<Vertex>(u), static_cast<Vertex>(v), w});
        } else if (keyword == "p") {
            read_incentive(r, n, incentives, has_incentive);
            any_incentive = true;
        } else {
            r.fail_at(0, "unknown record '" + std::string(keyword) + "'");
        }
    });

    if (stage != Stage::body) throw WtgParseError(last_line, 1, "incomplete header");
    for (Vertex v = 1; v <= n; ++v) {
        if (tau_line[v] == 0) throw WtgParseError(last_line, 1, "missing threshold line for vertex " + std::to_string(v));
    }
    WtgDocument doc{Instance(mode, std::move(tau), std::move(edges)), std::nullopt};
    if (auto violation = validate(doc.instance)) throw WtgParseError(last_line, 1, violation->message);
    if (any_incentive) doc.incentives = IncentiveVector(std::move(incentives));
    return doc;
}

IncentiveVector parse_incentives(std::string_view text, int n) {
    std::vector<Rational> values(static_cast<std::size_t>(n));
    std::vector<char> seen(static_cast<std::size_t>(n) + 1, 0);
    for_each_record(text, [&](const LineReader& r) {
        if (r.word(0) != "p") r.fail_at(0, "expected 'p <id> <incentive>'");
        read_incentive(r, n, values, seen);
    });
    return IncentiveVector(std::move(values));
}

std::string serialize_wtg(const Instance& instance, const IncentiveVector* incentives) {
    std::ostringstream os;
    os << "wtg 1\n";
    os << "mode " << to_string(instance.mode()) << "\n";
    os << "n " << instance.n() << "\n";
    for (Vertex v = 1; v <= instance.n(); ++v) os << "v " << v << " " << instance.threshold(v) << "\n";
    for (const auto& e : instance.edges()) os << "e " << e.u << " " << e.v << " " << e.weight << "\n";
    if (incentives) {
        for (Vertex v = 1; v <= incentives->size(); ++v) os << "p " << v << " " << (*incentives)[v] << "\n";
    }
    return os.str();
}

}  // namespace wtss
