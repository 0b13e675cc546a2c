#pragma once

#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "nakit/algebra.hpp"
#include "nakit/deformation.hpp"

namespace nakit {

struct ParseError : std::runtime_error {
    explicit ParseError(std::size_t line, const std::string& msg)
        : std::runtime_error("line " + std::to_string(line) + ": " + msg), line_no(line) {}
    std::size_t line_no;
};

struct AlgebraFile {
    Algebra algebra;
    std::vector<std::string> basis_names;        // e1..en unless declared
    std::map<std::string, Rational> params;
};

namespace detail {

inline std::vector<std::string> tokenize(const std::string& line) {
    std::istringstream is(line);
    std::vector<std::string> toks;
    std::string t;
    while (is >> t) toks.push_back(t);
    return toks;
}

// coefficient := rational | [rational '*'] name | '-' name
inline Rational parse_coeff(const std::string& tok, const std::map<std::string, Rational>& params,
                            std::size_t line_no) {
    if (auto r = try_parse_rational(tok)) return *r;
    auto star = tok.find('*');
    if (star != std::string::npos) {
        auto scale = try_parse_rational(tok.substr(0, star));
        if (!scale) throw ParseError(line_no, "bad coefficient '" + tok + "'");
        auto it = params.find(tok.substr(star + 1));
        if (it == params.end()) throw ParseError(line_no, "unbound parameter in '" + tok + "'");
        return *scale * it->second;
    }
    bool neg = !tok.empty() && tok[0] == '-';
    std::string name = neg ? tok.substr(1) : tok;
    auto it = params.find(name);
    if (it == params.end()) throw ParseError(line_no, "unbound parameter '" + name + "'");
    return neg ? -it->second : it->second;
}

} // namespace detail

/// Parses the algebra text format:
///   dim <n>
///   basis <names...>                      (optional)
///   param <name> <rational>               (any number)
///   mul <ei> <ej> -> <coeff> <ek> [+ <coeff> <ek> ...]
/// Omitted products are zero. Duplicate mul lines for one (i,j) are an error.
/// `overrides` rebinds param values without editing the text.
inline AlgebraFile parse_algebra(const std::string& text,
                                 const std::map<std::string, Rational>& overrides = {}) {
    std::istringstream is(text);
    std::string line;
    std::size_t line_no = 0;
    AlgebraFile out;
    bool have_dim = false;
    std::size_t n = 0;
    std::map<std::string, std::size_t> name_to_index;
    std::vector<std::pair<std::size_t, std::size_t>> seen;
    auto element_index = [&](const std::string& tok, std::size_t ln) -> std::size_t {
        auto it = name_to_index.find(tok);
        if (it == name_to_index.end())
            throw ParseError(ln, "unknown basis element '" + tok + "'");
        return it->second;
    };
    while (std::getline(is, line)) {
        ++line_no;
        auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        auto toks = detail::tokenize(line);
        if (toks.empty()) continue;
        if (toks[0] == "dim") {
            if (have_dim) throw ParseError(line_no, "duplicate dim");
            if (toks.size() != 2) throw ParseError(line_no, "expected: dim <n>");
            long v = 0;
            try { v = std::stol(toks[1]); } catch (...) { throw ParseError(line_no, "bad dimension"); }
            if (v < 1) throw ParseError(line_no, "dimension must be >= 1");
            n = static_cast<std::size_t>(v);
            out.algebra = Algebra(n);
            out.basis_names.clear();
            for (std::size_t i = 0; i < n; ++i) {
                out.basis_names.push_back("e" + std::to_string(i + 1));
                name_to_index[out.basis_names.back()] = i;
            }
            have_dim = true;
        } else if (toks[0] == "basis") {
            if (!have_dim) throw ParseError(line_no, "basis before dim");
            if (toks.size() != n + 1) throw ParseError(line_no, "basis needs exactly dim names");
            name_to_index.clear();
            out.basis_names.clear();
            for (std::size_t i = 0; i < n; ++i) {
                out.basis_names.push_back(toks[i + 1]);
                name_to_index[toks[i + 1]] = i;
            }
        } else if (toks[0] == "param") {
            if (toks.size() != 3) throw ParseError(line_no, "expected: param <name> <rational>");
            auto r = try_parse_rational(toks[2]);
            if (!r) throw ParseError(line_no, "bad rational '" + toks[2] + "'");
            auto ov = overrides.find(toks[1]);
            out.params[toks[1]] = ov != overrides.end() ? ov->second : *r;
        } else if (toks[0] == "mul") {
            if (!have_dim) throw ParseError(line_no, "mul before dim");
            if (toks.size() < 5 || toks[3] != "->")
                throw ParseError(line_no, "expected: mul <ei> <ej> -> <coeff> <ek> [+ ...]");
            std::size_t i = element_index(toks[1], line_no);
            std::size_t j = element_index(toks[2], line_no);
            for (auto& p : seen)
                if (p.first == i && p.second == j)
                    throw ParseError(line_no, "duplicate product for (" + toks[1] + "," + toks[2] + ")");
            seen.emplace_back(i, j);
            std::size_t pos = 4;
            while (pos < toks.size()) {
                if (pos + 1 >= toks.size()) throw ParseError(line_no, "truncated term");
                Rational c = detail::parse_coeff(toks[pos], out.params, line_no);
                std::size_t k = element_index(toks[pos + 1], line_no);
                out.algebra.at(i, j, k) += c;
                pos += 2;
                if (pos < toks.size()) {
                    if (toks[pos] != "+") throw ParseError(line_no, "expected '+' between terms");
                    ++pos;
                }
            }
        } else {
            throw ParseError(line_no, "unknown directive '" + toks[0] + "'");
        }
    }
    if (!have_dim) throw ParseError(line_no, "missing dim");
    return out;
}

inline std::string serialize_algebra(const Algebra& a,
                                     const std::vector<std::string>& basis_names = {}) {
    std::size_t n = a.dim();
    std::vector<std::string> names = basis_names;
    if (names.empty())
        for (std::size_t i = 0; i < n; ++i) names.push_back("e" + std::to_string(i + 1));
    std::ostringstream os;
    os << "dim " << n << "\n";
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            bool any = false;
            for (std::size_t k = 0; k < n; ++k) any = any || !is_zero(a.at(i, j, k));
            if (!any) continue;
            os << "mul " << names[i] << " " << names[j] << " ->";
            bool first = true;
            for (std::size_t k = 0; k < n; ++k) {
                if (is_zero(a.at(i, j, k))) continue;
                os << (first ? " " : " + ") << to_string(a.at(i, j, k)) << " " << names[k];
                first = false;
            }
            os << "\n";
        }
    return os.str();
}

/// Deformation file: the algebra format repeated in sections
/// "order 0", "order 1", ... Sections must be contiguous from 0 and share
/// one dimension.
inline TruncatedDeformation parse_deformation(const std::string& text,
                                              const std::map<std::string, Rational>& overrides = {}) {
    std::istringstream is(text);
    std::string line;
    std::vector<std::string> sections;
    std::string current;
    bool in_section = false;
    std::size_t expected = 0;
    while (std::getline(is, line)) {
        auto toks = detail::tokenize(line);
        if (!toks.empty() && toks[0] == "order") {
            if (toks.size() != 2 || toks[1] != std::to_string(expected))
                throw std::runtime_error("deformation sections must be 'order 0', 'order 1', ...");
            if (in_section) sections.push_back(current);
            current.clear();
            in_section = true;
            ++expected;
            continue;
        }
        if (in_section) current += line + "\n";
    }
    if (in_section) sections.push_back(current);
    if (sections.empty()) throw std::runtime_error("deformation file has no 'order' sections");
    TruncatedDeformation def;
    for (const auto& s : sections) {
        AlgebraFile f = parse_algebra(s, overrides);
        if (!def.maps.empty() && f.algebra.dim() != def.dim())
            throw std::runtime_error("deformation sections disagree on dimension");
        def.maps.push_back(f.algebra);
    }
    return def;
}

} // namespace nakit
