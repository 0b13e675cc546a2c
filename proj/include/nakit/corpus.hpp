#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "nakit/algebra_io.hpp"

namespace nakit {

/// A shipped example algebra: definition text in the algebra file format
/// (possibly parameterized) plus the properties it is expected to satisfy.
/// Expected properties are those holding for every parameter value; the test
/// suite samples parameters and checks each row.
struct CorpusEntry {
    std::string id;
    std::string description;
    std::string text;
    std::vector<std::string> param_names;
    std::vector<std::pair<std::string, bool>> expected;  // identity name -> value

    Algebra instantiate(const std::map<std::string, Rational>& params = {}) const {
        return parse_algebra(text, params).algebra;
    }
};

namespace detail {

inline std::string octonion_text() {
    // Fano-plane table with cyclic triples (1,2,4),(2,3,5),(3,4,6),(4,5,7),
    // (5,6,1),(6,7,2),(7,1,3): e_a e_b = e_c cyclically, anticommutative,
    // e_i e_i = -1. Basis e0 = 1, e1..e7.
    static const int triples[7][3] = {{1, 2, 4}, {2, 3, 5}, {3, 4, 6}, {4, 5, 7},
                                      {5, 6, 1}, {6, 7, 2}, {7, 1, 3}};
    Algebra a(8);
    for (std::size_t i = 0; i < 8; ++i) {
        a.at(0, i, i) = 1;
        a.at(i, 0, i) = 1;
    }
    a.at(0, 0, 0) = 1;
    for (std::size_t i = 1; i < 8; ++i) a.at(i, i, 0) = -1;
    for (const auto& t : triples) {
        const int a1 = t[0], b = t[1], c = t[2];
        a.at(a1, b, c) = 1;  a.at(b, a1, c) = -1;
        a.at(b, c, a1) = 1;  a.at(c, b, a1) = -1;
        a.at(c, a1, b) = 1;  a.at(a1, c, b) = -1;
    }
    std::vector<std::string> names = {"e0", "e1", "e2", "e3", "e4", "e5", "e6", "e7"};
    std::string body = serialize_algebra(a, names);
    body.erase(0, body.find('\n') + 1);  // serialize emits "dim 8" first; basis goes in between
    return "dim 8\nbasis e0 e1 e2 e3 e4 e5 e6 e7\n" + body;
}

} // namespace detail

inline const std::vector<CorpusEntry>& corpus() {
    static const std::vector<CorpusEntry> entries = [] {
        std::vector<CorpusEntry> c;
        auto add = [&](std::string id, std::string desc, std::string text,
                       std::vector<std::string> params,
                       std::vector<std::pair<std::string, bool>> expected) {
            c.push_back(CorpusEntry{std::move(id), std::move(desc), std::move(text),
                                    std::move(params), std::move(expected)});
        };
        add("k1", "one-dimensional unital algebra",
            "dim 1\nmul e1 e1 -> 1 e1\n", {},
            {{"commutative", true}, {"associative", true}, {"lie_admissible", true},
             {"three_power_associative", true}, {"weakly_associative", true}});
        add("kx2", "truncated polynomials K[x]/(x^2); basis 1, x",
            "dim 2\nmul e1 e1 -> 1 e1\nmul e1 e2 -> 1 e2\nmul e2 e1 -> 1 e2\n", {},
            {{"commutative", true}, {"associative", true}, {"weakly_associative", true},
             {"lie_admissible", true}, {"jacobi_jordan", false}});
        add("kx3", "truncated polynomials K[x]/(x^3); basis 1, x, x^2",
            "dim 3\n"
            "mul e1 e1 -> 1 e1\nmul e1 e2 -> 1 e2\nmul e2 e1 -> 1 e2\n"
            "mul e1 e3 -> 1 e3\nmul e3 e1 -> 1 e3\nmul e2 e2 -> 1 e3\n", {},
            {{"commutative", true}, {"associative", true}, {"weakly_associative", true}});
        add("kk", "split algebra K x K; two orthogonal idempotents",
            "dim 2\nmul e1 e1 -> 1 e1\nmul e2 e2 -> 1 e2\n", {},
            {{"commutative", true}, {"associative", true}});
        add("kxy", "K[x,y]/(x^2,y^2); basis 1, x, y, xy",
            "dim 4\n"
            "mul e1 e1 -> 1 e1\nmul e1 e2 -> 1 e2\nmul e2 e1 -> 1 e2\n"
            "mul e1 e3 -> 1 e3\nmul e3 e1 -> 1 e3\nmul e1 e4 -> 1 e4\nmul e4 e1 -> 1 e4\n"
            "mul e2 e3 -> 1 e4\nmul e3 e2 -> 1 e4\n", {},
            {{"commutative", true}, {"associative", true}, {"weakly_associative", true}});
        add("ut2", "two-dimensional noncommutative associative algebra",
            "dim 2\nmul e1 e1 -> 1 e1\nmul e1 e2 -> 1 e2\n", {},
            {{"commutative", false}, {"associative", true}, {"weakly_associative", true},
             {"lie_admissible", true}});
        add("aff2", "nonabelian two-dimensional Lie algebra, [e1,e2] = e2",
            "dim 2\nmul e1 e2 -> 1 e2\nmul e2 e1 -> -1 e2\n", {},
            {{"skew", true}, {"lie", true}, {"lie_admissible", true},
             {"weakly_associative", true}, {"symmetric_leibniz", true}});
        add("sl2", "sl(2): [h,e] = 2e, [h,f] = -2f, [e,f] = h (basis e,f,h)",
            "dim 3\nbasis e f h\n"
            "mul h e -> 2 e\nmul e h -> -2 e\n"
            "mul h f -> -2 f\nmul f h -> 2 f\n"
            "mul e f -> 1 h\nmul f e -> -1 h\n", {},
            {{"skew", true}, {"lie", true}, {"symmetric_leibniz", true},
             {"weakly_associative", true}, {"associative", false}});
        add("jj2", "nilpotent commutative algebra e1e1 = e2 (Jacobi-Jordan)",
            "dim 2\nmul e1 e1 -> 1 e2\n", {},
            {{"commutative", true}, {"jacobi_jordan", true}, {"symmetric_leibniz", true},
             {"weakly_associative", true}, {"nil4", true}});
        add("jj3", "jj2 plus an annihilating third basis vector",
            "dim 3\nmul e1 e1 -> 1 e2\n", {},
            {{"commutative", true}, {"jacobi_jordan", true}, {"symmetric_leibniz", true},
             {"nil4", true}});
        add("aa3-1", "skew anti-associative algebra e1e2 = -e2e1 = e3 (Heisenberg bracket)",
            "dim 3\nmul e1 e2 -> 1 e3\nmul e2 e1 -> -1 e3\n", {},
            {{"skew", true}, {"anti_associative", true}, {"lie", true}, {"nil4", true}});
        add("aa3-2", "free anti-associative algebra on one generator: e1e1 = e2, e1e2 = -e2e1 = e3",
            "dim 3\nmul e1 e1 -> 1 e2\nmul e1 e2 -> 1 e3\nmul e2 e1 -> -1 e3\n", {},
            {{"anti_associative", true}, {"nil4", true}, {"commutative", false},
             {"skew", false}});
        add("aa3-3", "anti-associative family e1e1 = e2, e1e3 = a e2, e3e1 = b e2, e3e3 = e2",
            "dim 3\nparam a 1\nparam b 1\n"
            "mul e1 e1 -> 1 e2\nmul e1 e3 -> a e2\nmul e3 e1 -> b e2\nmul e3 e3 -> 1 e2\n",
            {"a", "b"},
            {{"anti_associative", true}, {"nil4", true}});
        add("aa3-4", "anti-associative family e1e1 = e2, e1e3 = a e2, e3e1 = b e2",
            "dim 3\nparam a 1\nparam b 1\n"
            "mul e1 e1 -> 1 e2\nmul e1 e3 -> a e2\nmul e3 e1 -> b e2\n",
            {"a", "b"},
            {{"anti_associative", true}, {"nil4", true}});
        add("p33", "two-dimensional commutative family: e1e1 = 2b e1, e1e2 = e2e1 = a e1 + b e2, e2e2 = 2a e2",
            "dim 2\nparam a 0\nparam b 1\n"
            "mul e1 e1 -> 2*b e1\nmul e1 e2 -> a e1 + b e2\nmul e2 e1 -> a e1 + b e2\n"
            "mul e2 e2 -> 2*a e2\n",
            {"a", "b"},
            {{"commutative", true}, {"lie_admissible", true},
             {"three_power_associative", true}, {"weakly_associative", true}});
        add("g5-2", "depolarization of p33 at (1,1) with bracket [e1,e2] = e2; (Id+c+c^2)-associative, not weakly associative",
            "dim 2\nmul e1 e1 -> 2 e1\nmul e1 e2 -> 1 e1 + 2 e2\nmul e2 e1 -> 1 e1\n"
            "mul e2 e2 -> 2 e2\n", {},
            {{"commutative", false}, {"associative", false}, {"lie_admissible", true},
             {"three_power_associative", true}, {"weakly_associative", false}});
        add("wa2", "depolarization of p33 at (0,2) with bracket [e1,e2] = e2; weakly associative, not associative",
            "dim 2\nmul e1 e1 -> 4 e1\nmul e1 e2 -> 3 e2\nmul e2 e1 -> 1 e2\n", {},
            {{"weakly_associative", true}, {"associative", false}, {"commutative", false},
             {"lie_admissible", true}, {"three_power_associative", true}});
        add("vinberg2", "two-dimensional Vinberg (left-symmetric) algebra e2e1 = e1, not associative",
            "dim 2\nmul e2 e1 -> 1 e1\n", {},
            {{"associative", false}, {"lie_admissible", true},
             {"three_power_associative", false}});
        add("t13-2", "(Id - t13)-associative, non-associative: e1e1 = 2e1, e1e2 = -2e1, e2e2 = -2e2",
            "dim 2\nmul e1 e1 -> 2 e1\nmul e1 e2 -> -2 e1\nmul e2 e2 -> -2 e2\n", {},
            {{"associative", false}, {"lie_admissible", true}});
        add("leib2", "right Leibniz, not left Leibniz: e1e2 = e1",
            "dim 2\nmul e1 e2 -> 1 e1\n", {},
            {{"right_leibniz", true}, {"left_leibniz", false}, {"lie", false},
             {"lie_admissible", true}});
        add("lleib2", "left Leibniz, not right Leibniz: e2e1 = e1",
            "dim 2\nmul e2 e1 -> 1 e1\n", {},
            {{"left_leibniz", true}, {"right_leibniz", false}, {"lie", false}});
        add("octonions", "octonions over the rationals; e0 = 1, Fano triples (1,2,4),(2,3,5),(3,4,6),(4,5,7),(5,6,1),(6,7,2),(7,1,3)",
            detail::octonion_text(), {},
            {{"commutative", false}, {"associative", false},
             {"three_power_associative", true}, {"lie_admissible", false}});
        return c;
    }();
    return entries;
}

inline const CorpusEntry* find_corpus_entry(std::string_view id) {
    for (const auto& e : corpus())
        if (e.id == id) return &e;
    return nullptr;
}

} // namespace nakit
