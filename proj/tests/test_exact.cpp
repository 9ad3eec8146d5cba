#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "specgraph/specgraph.hpp"

using namespace specgraph;

namespace {

// independent rank oracle: textbook Gaussian elimination over rationals
int rational_rank(const IntegerMatrix& m) {
    std::vector<std::vector<Rational>> a(m.rows, std::vector<Rational>(m.cols));
    for (int i = 0; i < m.rows; ++i)
        for (int j = 0; j < m.cols; ++j) a[i][j] = Rational(m.at(i, j));
    int rank = 0;
    for (int col = 0; col < m.cols && rank < m.rows; ++col) {
        int piv = -1;
        for (int i = rank; i < m.rows; ++i)
            if (a[i][col] != 0) {
                piv = i;
                break;
            }
        if (piv < 0) continue;
        std::swap(a[piv], a[rank]);
        for (int i = rank + 1; i < m.rows; ++i) {
            if (a[i][col] == 0) continue;
            Rational f = a[i][col] / a[rank][col];
            for (int j = col; j < m.cols; ++j) a[i][j] -= f * a[rank][j];
        }
        ++rank;
    }
    return rank;
}

IntegerMatrix random_matrix(std::mt19937& rng, int rows, int cols) {
    IntegerMatrix m(rows, cols);
    for (int i = 0; i < rows; ++i)
        for (int j = 0; j < cols; ++j)
            m.at(i, j) = static_cast<int>(rng() % 7) - 3;
    return m;
}

} // namespace

TEST_CASE("integer matrices multiply and transpose") {
    IntegerMatrix a(2, 3);
    a.at(0, 0) = 1;
    a.at(0, 1) = 2;
    a.at(0, 2) = 3;
    a.at(1, 0) = 0;
    a.at(1, 1) = -1;
    a.at(1, 2) = 4;
    IntegerMatrix at = a.transpose();
    REQUIRE(at.rows == 3);
    REQUIRE(at.at(2, 1) == 4);
    IntegerMatrix prod = a * at;
    REQUIRE(prod.at(0, 0) == 14);
    REQUIRE(prod.at(0, 1) == 10);
    REQUIRE(prod.at(1, 1) == 17);
    REQUIRE(IntegerMatrix::identity(3) * at == at);
}

TEST_CASE("adjacency and seidel matrices") {
    Graph s2 = star(2);
    IntegerMatrix a = adjacency_matrix(s2);
    REQUIRE(a.at(0, 1) == 1);
    REQUIRE(a.at(1, 2) == 0);
    REQUIRE(a.at(1, 1) == 0);
    IntegerMatrix s = seidel_matrix(s2);
    REQUIRE(s.at(0, 0) == 0);
    REQUIRE(s.at(0, 1) == -1);
    REQUIRE(s.at(1, 2) == 1);
    // S = J - I - 2A entrywise
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j)
            REQUIRE(s.at(i, j) == (i == j ? 0 : 1) - 2 * a.at(i, j));
}

TEST_CASE("integer rank matches a rational elimination oracle") {
    REQUIRE(integer_rank(IntegerMatrix(3, 3)) == 0);
    REQUIRE(integer_rank(IntegerMatrix::identity(5)) == 5);
    IntegerMatrix m(2, 2);
    m.at(0, 0) = 2;
    m.at(0, 1) = 4;
    m.at(1, 0) = 1;
    m.at(1, 1) = 2;
    REQUIRE(integer_rank(m) == 1);

    std::mt19937 rng(20260816);
    for (int trial = 0; trial < 150; ++trial) {
        int rows = 1 + static_cast<int>(rng() % 8);
        int cols = 1 + static_cast<int>(rng() % 8);
        IntegerMatrix r = random_matrix(rng, rows, cols);
        REQUIRE(integer_rank(r) == rational_rank(r));
    }
}

TEST_CASE("walk matrix columns are iterated neighbor sums") {
    Graph s2 = star(2);
    IntegerMatrix w = walk_matrix(s2);
    REQUIRE(w.rows == 3);
    REQUIRE(w.cols == 3);
    // columns: j, Aj, A^2 j
    REQUIRE(w.at(0, 0) == 1);
    REQUIRE(w.at(0, 1) == 2);
    REQUIRE(w.at(1, 1) == 1);
    REQUIRE(w.at(0, 2) == 2);
    REQUIRE(w.at(1, 2) == 2);
    REQUIRE(integer_rank(w) == 2);
}

TEST_CASE("exact main counts on known families") {
    REQUIRE(main_count_exact(Graph(0)) == 0);
    REQUIRE(main_count_exact(edgeless(5)) == 1);
    REQUIRE(main_count_exact(complete(7)) == 1);
    REQUIRE(main_count_exact(petersen()) == 1);   // regular
    REQUIRE(main_count_exact(star(2)) == 2);      // nonregular biregular, equitable
    REQUIRE(main_count_exact(cliques_union({3, 3, 2})) == 2);
    REQUIRE(main_count_exact(disjoint_union(cycle(4), edgeless(2))) == 2);
    REQUIRE(main_count_exact(disjoint_union(star(4), edgeless(1))) == 3);
}

TEST_CASE("main count is invariant under relabeling and complement") {
    std::mt19937 rng(77);
    for (int n = 1; n <= 6; ++n)
        for (const Graph& g : all_graphs(n)) {
            int r = main_count_exact(g);
            REQUIRE(main_count_exact(complement(g)) == r);
            std::vector<int> perm(n);
            for (int i = 0; i < n; ++i) perm[i] = i;
            std::shuffle(perm.begin(), perm.end(), rng);
            REQUIRE(main_count_exact(relabel(g, perm)) == r);
        }
}

TEST_CASE("minimal polynomial degrees") {
    REQUIRE(minimal_polynomial_degree(complete(5)) == 2);
    REQUIRE(minimal_polynomial_degree(petersen()) == 3);
    REQUIRE(minimal_polynomial_degree(cycle(4)) == 3);
    REQUIRE(minimal_polynomial_degree(Graph::from_edges(4, {{0, 1}, {1, 2}, {2, 3}})) == 4);
    REQUIRE(minimal_polynomial_degree(edgeless(4)) == 1);
    REQUIRE(minimal_polynomial_degree(Graph(1)) == 1);
    REQUIRE(minimal_polynomial_degree(seidel_matrix(petersen())) == 2);
    REQUIRE(minimal_polynomial_degree(seidel_matrix(star(2))) == 2);
    REQUIRE(minimal_polynomial_degree(seidel_switch(rook(6), rook_row(6, 0))) == 4);
}

TEST_CASE("span membership solves and verifies exactly") {
    IntegerMatrix i3 = IntegerMatrix::identity(3);
    IntegerMatrix two_i(3, 3);
    for (int i = 0; i < 3; ++i) two_i.at(i, i) = 2;
    auto c = span_membership(two_i, {i3});
    REQUIRE(c.has_value());
    REQUIRE((*c)[0] == 2);

    // Petersen: S^2 = 9I
    IntegerMatrix s = seidel_matrix(petersen());
    IntegerMatrix s2 = s * s;
    IntegerMatrix jm(10, 10);
    for (int i = 0; i < 10; ++i)
        for (int j = 0; j < 10; ++j) jm.at(i, j) = 1;
    auto coeffs = span_membership(s2, {s, IntegerMatrix::identity(10), jm});
    REQUIRE(coeffs.has_value());
    REQUIRE((*coeffs)[0] == 0);
    REQUIRE((*coeffs)[1] == 9);
    REQUIRE((*coeffs)[2] == 0);

    // P_4 is not strong: S^2 leaves the span
    Graph p4 = Graph::from_edges(4, {{0, 1}, {1, 2}, {2, 3}});
    IntegerMatrix sp = seidel_matrix(p4);
    IntegerMatrix jp(4, 4);
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) jp.at(i, j) = 1;
    REQUIRE_FALSE(span_membership(sp * sp, {sp, IntegerMatrix::identity(4), jp}).has_value());
}

TEST_CASE("span solutions reproduce the target when recombined") {
    std::mt19937 rng(424242);
    int found = 0;
    for (int trial = 0; trial < 60; ++trial) {
        int n = 2 + static_cast<int>(rng() % 5);
        std::vector<std::pair<int, int>> es;
        for (int j = 1; j < n; ++j)
            for (int i = 0; i < j; ++i)
                if (rng() % 2) es.emplace_back(i, j);
        Graph g = Graph::from_edges(n, es);
        IntegerMatrix s = seidel_matrix(g);
        IntegerMatrix jm(n, n);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) jm.at(i, j) = 1;
        IntegerMatrix id = IntegerMatrix::identity(n);
        auto coeffs = span_membership(s * s, {s, id, jm});
        if (!coeffs) continue;
        ++found;
        // recombine independently of the solver's own verification
        const auto& c = *coeffs;
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) {
                Rational want = Rational((s * s).at(i, j));
                Rational got = c[0] * Rational(s.at(i, j)) + c[1] * Rational(id.at(i, j)) +
                               c[2] * Rational(jm.at(i, j));
                REQUIRE(got == want);
            }
    }
    REQUIRE(found > 0); // small graphs include strong ones
}
