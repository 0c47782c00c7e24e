#include "vdual/problem.hpp"

#include <algorithm>
#include <cctype>
#include <set>
#include <sstream>

namespace vdual {

namespace {

const std::set<std::string>& known_kinds() {
    static const std::set<std::string> kinds = {
        "gb",          "resolve",   "loci",          "duality",
        "p-duality",   "normality", "regular-sequence", "depth-z1",
        "counterexample", "socle",  "tensor-condition"};
    return kinds;
}

const std::set<std::string>& known_keys() {
    static const std::set<std::string> keys = {"ideal", "tuple", "p", "q", "seed"};
    return keys;
}

[[noreturn]] void parse_fail(int line, const std::string& msg) {
    fail("ParseError", "line " + std::to_string(line) + ": " + msg);
}

std::vector<std::string> split_ws(const std::string& s) {
    std::vector<std::string> out;
    std::istringstream is(s);
    std::string tok;
    while (is >> tok) out.push_back(tok);
    return out;
}

std::string strip(const std::string& s) {
    size_t a = s.find_first_not_of(" \t\r\n");
    if (a == std::string::npos) return "";
    size_t b = s.find_last_not_of(" \t\r\n");
    return s.substr(a, b - a + 1);
}

bool valid_name(const std::string& s) {
    if (s.empty()) return false;
    if (!(std::isalpha(static_cast<unsigned char>(s[0])) || s[0] == '_')) return false;
    for (char c : s)
        if (!(std::isalnum(static_cast<unsigned char>(c)) || c == '_')) return false;
    return true;
}

std::vector<Polynomial> parse_poly_list(const RingPtr& ring, const std::string& text, int line) {
    std::vector<Polynomial> out;
    std::string cur;
    std::istringstream is(text);
    while (std::getline(is, cur, ',')) {
        cur = strip(cur);
        if (cur.empty()) parse_fail(line, "empty polynomial in list");
        try {
            out.push_back(parse_polynomial(ring, cur));
        } catch (const AlgebraError& e) {
            parse_fail(line, e.what());
        }
    }
    if (out.empty()) parse_fail(line, "expected at least one polynomial");
    return out;
}

} // namespace

const Ideal* ProblemFile::find_ideal(const std::string& name) const {
    for (const auto& [n, I] : ideals)
        if (n == name) return &I;
    return nullptr;
}

const std::vector<Polynomial>* ProblemFile::find_tuple(const std::string& name) const {
    for (const auto& [n, t] : tuples)
        if (n == name) return &t;
    return nullptr;
}

ProblemFile parse_problem(const std::string& text) {
    ProblemFile p;
    std::istringstream is(text);
    std::string raw;
    int lineno = 0;
    while (std::getline(is, raw)) {
        ++lineno;
        std::string line = strip(raw);
        if (line.empty() || line[0] == '#') continue;

        if (line.rfind("ring:", 0) == 0) {
            if (p.ring) parse_fail(lineno, "duplicate ring declaration");
            auto toks = split_ws(line.substr(5));
            std::vector<std::string> vars;
            std::vector<long> weights;
            size_t i = 0;
            for (; i < toks.size() && toks[i] != "weights"; ++i) {
                if (!valid_name(toks[i])) parse_fail(lineno, "invalid variable name " + toks[i]);
                vars.push_back(toks[i]);
            }
            if (i < toks.size()) {
                ++i;  // skip "weights"
                for (; i < toks.size(); ++i) {
                    try {
                        size_t used = 0;
                        long w = std::stol(toks[i], &used);
                        if (used != toks[i].size()) throw std::invalid_argument(toks[i]);
                        weights.push_back(w);
                    } catch (const std::exception&) {
                        parse_fail(lineno, "invalid weight " + toks[i]);
                    }
                }
                if (weights.size() != vars.size())
                    parse_fail(lineno, "weight count does not match variable count");
            }
            try {
                p.ring = RingSpec::make(std::move(vars), std::move(weights));
            } catch (const AlgebraError& e) {
                parse_fail(lineno, e.what());
            }
            continue;
        }

        if (!p.ring) parse_fail(lineno, "ring declaration must come first");

        if (line.rfind("ideal ", 0) == 0) {
            auto colon = line.find(':');
            if (colon == std::string::npos) parse_fail(lineno, "missing ':' in ideal line");
            auto head = split_ws(line.substr(6, colon - 6));
            if (head.empty()) parse_fail(lineno, "missing ideal name");
            std::string name = head[0];
            if (!valid_name(name)) parse_fail(lineno, "invalid ideal name " + name);
            if (p.find_ideal(name)) parse_fail(lineno, "duplicate ideal name " + name);
            bool radical = false, pure = false;
            for (size_t i = 1; i < head.size(); ++i) {
                if (head[i] == "radical")
                    radical = true;
                else if (head[i] == "pure")
                    pure = true;
                else
                    parse_fail(lineno, "unknown ideal flag " + head[i]);
            }
            auto gens = parse_poly_list(p.ring, line.substr(colon + 1), lineno);
            p.ideals.emplace_back(name, Ideal(p.ring, std::move(gens), radical, pure));
            continue;
        }

        if (line.rfind("tuple ", 0) == 0) {
            auto colon = line.find(':');
            if (colon == std::string::npos) parse_fail(lineno, "missing ':' in tuple line");
            std::string name = strip(line.substr(6, colon - 6));
            if (!valid_name(name)) parse_fail(lineno, "invalid tuple name " + name);
            if (p.find_tuple(name)) parse_fail(lineno, "duplicate tuple name " + name);
            p.tuples.emplace_back(name, parse_poly_list(p.ring, line.substr(colon + 1), lineno));
            continue;
        }

        if (line.rfind("analyze ", 0) == 0) {
            auto toks = split_ws(line.substr(8));
            if (toks.empty()) parse_fail(lineno, "missing analysis kind");
            AnalysisRequest req;
            req.kind = toks[0];
            req.line = lineno;
            if (!known_kinds().count(req.kind)) parse_fail(lineno, "unknown analysis " + req.kind);
            for (size_t i = 1; i < toks.size(); ++i) {
                auto eq = toks[i].find('=');
                if (eq == std::string::npos) parse_fail(lineno, "expected key=value, got " + toks[i]);
                std::string key = toks[i].substr(0, eq);
                std::string value = toks[i].substr(eq + 1);
                if (!known_keys().count(key)) parse_fail(lineno, "unknown key " + key);
                if (value.empty()) parse_fail(lineno, "empty value for key " + key);
                if (req.params.count(key)) parse_fail(lineno, "duplicate key " + key);
                req.params[key] = value;
            }
            if (req.params.count("ideal") && !p.find_ideal(req.params.at("ideal")))
                parse_fail(lineno, "unknown ideal " + req.params.at("ideal"));
            if (req.params.count("tuple") && !p.find_tuple(req.params.at("tuple")))
                parse_fail(lineno, "unknown tuple " + req.params.at("tuple"));
            p.analyses.push_back(std::move(req));
            continue;
        }

        parse_fail(lineno, "unrecognized line: " + line);
    }
    if (!p.ring) fail("ParseError", "missing ring declaration");
    return p;
}

std::string print_problem(const ProblemFile& p) {
    std::ostringstream os;
    os << "ring:";
    for (const auto& v : p.ring->variables()) os << " " << v;
    bool unit_weights = true;
    for (long w : p.ring->weights())
        if (w != 1) unit_weights = false;
    if (!unit_weights) {
        os << " weights";
        for (long w : p.ring->weights()) os << " " << w;
    }
    os << "\n";
    for (const auto& [name, I] : p.ideals) {
        os << "ideal " << name;
        if (I.declared_radical()) os << " radical";
        if (I.declared_pure_dimensional()) os << " pure";
        os << ":";
        for (size_t i = 0; i < I.generators().size(); ++i)
            os << (i ? ", " : " ") << to_string(I.generators()[i]);
        os << "\n";
    }
    for (const auto& [name, t] : p.tuples) {
        os << "tuple " << name << ":";
        for (size_t i = 0; i < t.size(); ++i) os << (i ? ", " : " ") << to_string(t[i]);
        os << "\n";
    }
    for (const auto& a : p.analyses) {
        os << "analyze " << a.kind;
        for (const auto& [k, v] : a.params) os << " " << k << "=" << v;
        os << "\n";
    }
    return os.str();
}

bool operator==(const ProblemFile& a, const ProblemFile& b) {
    if (!a.ring->same_as(*b.ring)) return false;
    if (a.ideals.size() != b.ideals.size() || a.tuples.size() != b.tuples.size() ||
        a.analyses.size() != b.analyses.size())
        return false;
    for (size_t i = 0; i < a.ideals.size(); ++i) {
        const auto& [na, ia] = a.ideals[i];
        const auto& [nb, ib] = b.ideals[i];
        if (na != nb || ia.generators() != ib.generators() ||
            ia.declared_radical() != ib.declared_radical() ||
            ia.declared_pure_dimensional() != ib.declared_pure_dimensional())
            return false;
    }
    for (size_t i = 0; i < a.tuples.size(); ++i)
        if (a.tuples[i] != b.tuples[i]) return false;
    for (size_t i = 0; i < a.analyses.size(); ++i)
        if (a.analyses[i].kind != b.analyses[i].kind ||
            a.analyses[i].params != b.analyses[i].params)
            return false;
    return true;
}

} // namespace vdual
