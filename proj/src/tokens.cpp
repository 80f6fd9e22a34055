#include "sodlab/tokens.hpp"

#include <charconv>
#include <sstream>

#include "sodlab/errors.hpp"

namespace sodlab {

namespace {

std::string trim(const std::string& s) {
    auto b = s.find_first_not_of(" \t");
    if (b == std::string::npos) return "";
    auto e = s.find_last_not_of(" \t");
    return s.substr(b, e - b + 1);
}

int parse_int(const std::string& s, const std::string& what) {
    int value = 0;
    auto t = trim(s);
    auto [p, ec] = std::from_chars(t.data(), t.data() + t.size(), value);
    require(ec == std::errc{} && p == t.data() + t.size(),
            what + " is not an integer: '" + s + "'");
    return value;
}

// Splits on sep at bracket depth zero; brackets never nest in the grammar.
std::vector<std::string> split_top(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::string cur;
    int depth = 0;
    for (char c : s) {
        if (c == '[') ++depth;
        if (c == ']') --depth;
        if (c == sep && depth == 0) {
            out.push_back(cur);
            cur.clear();
        } else {
            cur += c;
        }
    }
    out.push_back(cur);
    return out;
}

// Peels an optional trailing [<shift>] off a token.
std::pair<std::string, int> peel_shift(const std::string& tok) {
    if (tok.empty() || tok.back() != ']') return {tok, 0};
    auto open = tok.rfind('[');
    require(open != std::string::npos, "unbalanced brackets in '" + tok + "'");
    if (open == 0) return {tok, 0};  // the token itself is a bracketed interval
    return {tok.substr(0, open),
            parse_int(tok.substr(open + 1, tok.size() - open - 2), "shift")};
}

std::string strip_parens(const std::string& tok, const std::string& what) {
    auto t = trim(tok);
    require(t.size() >= 2 && t.front() == '(' && t.back() == ')',
            what + " must be wrapped in parentheses: '" + tok + "'");
    return t.substr(1, t.size() - 2);
}

std::string shift_suffix(int s) {
    return s == 0 ? "" : "[" + std::to_string(s) + "]";
}

}  // namespace

// ------------------------------------------------------------- type A side

Interval parse_interval(const TypeACategory& cat, const std::string& tok) {
    auto t = trim(tok);
    require(!t.empty(), "empty object token");
    Interval iv{};
    if (t.front() == '[') {
        require(t.back() == ']', "unbalanced brackets in '" + tok + "'");
        auto parts = split_top(t.substr(1, t.size() - 2), ',');
        require(parts.size() == 2, "interval needs two endpoints: '" + tok + "'");
        iv = {parse_int(parts[0], "endpoint"), parse_int(parts[1], "endpoint")};
    } else {
        char kind = t.front();
        int v = parse_int(t.substr(1), "vertex");
        if (kind == 'S')
            iv = {v, v};
        else if (kind == 'P')
            iv = {v, cat.n()};
        else if (kind == 'I')
            iv = {1, v};
        else
            throw invalid_input("unrecognized object token: '" + tok + "'");
    }
    cat.check_interval(iv);
    return iv;
}

DerivedObject parse_object(const TypeACategory& cat, const std::string& expr) {
    DerivedObject x;
    for (const auto& raw : split_top(expr, '+')) {
        auto term = trim(raw);
        require(!term.empty(), "empty summand in '" + expr + "'");
        int mult = 1;
        auto star = term.find('*');
        if (star != std::string::npos && term.find('[') > star) {
            mult = parse_int(term.substr(0, star), "multiplicity");
            require(mult >= 1, "multiplicity must be positive in '" + term + "'");
            term = trim(term.substr(star + 1));
        }
        auto [base, shift] = peel_shift(term);
        x.add(parse_interval(cat, base), shift, mult);
    }
    return x;
}

ThickSet parse_thick(const TypeACategory& cat, const std::string& text) {
    ThickSet gens;
    for (const auto& tok : split_top(text, ','))
        gens.insert(parse_interval(cat, tok));
    return cat.thick_closure(gens);
}

namespace {

std::vector<ThickSet> parse_block_list(const TypeACategory& cat, const std::string& tok,
                                       const std::string& what) {
    std::vector<ThickSet> blocks;
    for (const auto& part : split_top(strip_parens(tok, what), '|'))
        blocks.push_back(parse_thick(cat, part));
    return blocks;
}

}  // namespace

Sod parse_sod(const TypeACategory& cat, const std::string& tok) {
    return make_sod(cat, parse_block_list(cat, tok, "a decomposition"));
}

TStability parse_tstab(const TypeACategory& cat, const std::string& tok) {
    return make_tstability(cat, parse_block_list(cat, tok, "a t-stability"));
}

TStability parse_tstab_local(const TypeACategory& cat, const std::string& tok) {
    return TStability{parse_block_list(cat, tok, "a t-stability")};
}

ExceptionalSequence parse_sequence(const TypeACategory& cat, const std::string& tok) {
    std::vector<Interval> items;
    for (const auto& part : split_top(strip_parens(tok, "a sequence"), '|'))
        items.push_back(parse_interval(cat, part));
    return make_sequence(cat, std::move(items));
}

std::vector<HNFactor> parse_factors(const TypeACategory& cat, const std::string& text) {
    auto t = trim(text);
    // Strip an outer [ ... ] wrapper; a factor item always carries an '@'.
    if (t.size() >= 2 && t.front() == '[' && t.back() == ']') {
        int depth = 0;
        std::size_t close = 0;
        for (std::size_t i = 0; i < t.size(); ++i) {
            if (t[i] == '[') ++depth;
            if (t[i] == ']' && --depth == 0) {
                close = i;
                break;
            }
        }
        if (close == t.size() - 1) t = t.substr(1, t.size() - 2);
    }
    std::vector<HNFactor> fs;
    for (const auto& raw : split_top(t, ',')) {
        auto item = trim(raw);
        auto at = item.rfind('@');
        require(at != std::string::npos, "factor needs object@phase: '" + item + "'");
        fs.push_back({parse_object(cat, item.substr(0, at)),
                      parse_int(item.substr(at + 1), "phase")});
    }
    return fs;
}

std::string object_token(const TypeACategory& cat, const DerivedObject& x) {
    if (x.is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [term, mult] : x.terms()) {
        if (!first) os << "+";
        first = false;
        if (mult > 1) os << mult << "*";
        os << cat.interval_name(term.iv) << shift_suffix(term.shift);
    }
    return os.str();
}

std::string thick_token(const TypeACategory& cat, const ThickSet& s) {
    std::ostringstream os;
    bool first = true;
    for (const auto& iv : s) {
        if (!first) os << ",";
        first = false;
        os << cat.interval_name(iv);
    }
    return os.str();
}

namespace {

std::string block_list_token(const TypeACategory& cat, const std::vector<ThickSet>& blocks) {
    std::ostringstream os;
    os << "(";
    for (std::size_t i = 0; i < blocks.size(); ++i) {
        if (i) os << "|";
        os << thick_token(cat, blocks[i]);
    }
    os << ")";
    return os.str();
}

}  // namespace

std::string sod_token(const TypeACategory& cat, const Sod& s) {
    return block_list_token(cat, s.blocks);
}

std::string tstab_token(const TypeACategory& cat, const TStability& t) {
    return block_list_token(cat, t.pieces);
}

std::string sequence_token(const TypeACategory& cat, const ExceptionalSequence& s) {
    std::ostringstream os;
    os << "(";
    for (std::size_t i = 0; i < s.items.size(); ++i) {
        if (i) os << "|";
        os << cat.interval_name(s.items[i]);
    }
    os << ")";
    return os.str();
}

std::string factors_token(const TypeACategory& cat, const std::vector<HNFactor>& fs) {
    std::ostringstream os;
    os << "[";
    for (std::size_t i = 0; i < fs.size(); ++i) {
        if (i) os << ", ";
        os << object_token(cat, fs[i].object) << "@" << fs[i].phase;
    }
    os << "]";
    return os.str();
}

// --------------------------------------------------------------- wpl2 side

Wpl2Object parse_wpl2_object(const std::string& tok) {
    auto [base, shift] = peel_shift(trim(tok));
    if (base == "O") return Wpl2Object::line(0, shift);
    if (base == "S10") return Wpl2Object::simple(0, shift);
    if (base == "S11") return Wpl2Object::simple(1, shift);
    if (base == "Sx") return Wpl2Object::rank_one(shift);
    if (base.size() >= 4 && base.rfind("O(", 0) == 0 && base.back() == ')')
        return Wpl2Object::line(parse_int(base.substr(2, base.size() - 3), "degree"),
                                shift);
    throw invalid_input("unrecognized object token: '" + tok + "'");
}

Wpl2Triple parse_wpl2_triple(const std::string& tok) {
    auto parts = split_top(strip_parens(tok, "a sequence"), '|');
    require(parts.size() == 3, "a sequence here has exactly three terms: '" + tok + "'");
    return {parse_wpl2_object(parts[0]), parse_wpl2_object(parts[1]),
            parse_wpl2_object(parts[2])};
}

std::string wpl2_triple_token(const Wpl2Triple& t) {
    return "(" + wpl2_name(t[0]) + "|" + wpl2_name(t[1]) + "|" + wpl2_name(t[2]) + ")";
}

}  // namespace sodlab
