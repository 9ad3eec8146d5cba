#include <catch2/catch_amalgamated.hpp>

#include <cmath>

#include "specgraph/specgraph.hpp"

using namespace specgraph;
using Catch::Matchers::WithinAbs;

namespace {
constexpr double kTol = 1e-9;

Graph path(int n) {
    std::vector<std::pair<int, int>> es;
    for (int i = 0; i + 1 < n; ++i) es.emplace_back(i, i + 1);
    return Graph::from_edges(n, es);
}
} // namespace

TEST_CASE("equitable partitions and quotients") {
    Graph p = petersen();
    // distance partition around vertex 0
    std::vector<VertexSet> sigma{{0}, {1, 4, 5}, {2, 3, 6, 7, 8, 9}};
    QuotientMatrix q = check_equitable(p, sigma);
    REQUIRE(q.equitable);
    std::vector<std::vector<Rational>> want{
        {0, 3, 0}, {1, 0, 2}, {0, 1, 2}};
    REQUIRE(q.b == want);

    REQUIRE_THROWS_AS(check_equitable(p, {{0, 1}, {1, 2}}), std::invalid_argument);
    REQUIRE_THROWS_AS(check_equitable(p, {{0, 1, 2}}), std::invalid_argument);
    REQUIRE_THROWS_AS(check_equitable(p, {{0}, {}, {1, 2, 3, 4, 5, 6, 7, 8, 9}}),
                      std::invalid_argument);
}

TEST_CASE("valency partitions: equitable and not") {
    QuotientMatrix q4 = valency_quotient(path(4));
    REQUIRE(q4.equitable);
    REQUIRE(q4.b == std::vector<std::vector<Rational>>{{0, 1}, {1, 1}});

    QuotientMatrix q5 = valency_quotient(path(5));
    REQUIRE_FALSE(q5.equitable);

    QuotientMatrix qd = valency_quotient(delete_vertex(petersen(), 0));
    REQUIRE(qd.equitable);
    REQUIRE(qd.b == std::vector<std::vector<Rational>>{{0, 2}, {1, 2}});

    // regular graph: single class, quotient [[k]]
    QuotientMatrix qp = valency_quotient(petersen());
    REQUIRE(qp.equitable);
    REQUIRE(qp.b == std::vector<std::vector<Rational>>{{3}});
}

TEST_CASE("degree-vector eigen equation for two mains") {
    auto s2 = check_two_main_equation(star(2));
    REQUIRE(s2.has_value());
    REQUIRE(s2->first == 0);
    REQUIRE(s2->second == 2);

    REQUIRE_FALSE(check_two_main_equation(petersen()).has_value()); // regular
    REQUIRE_FALSE(check_two_main_equation(disjoint_union(star(4), edgeless(1))).has_value());

    auto c4e2 = check_two_main_equation(disjoint_union(cycle(4), edgeless(2)));
    REQUIRE(c4e2.has_value());
    REQUIRE(c4e2->first == 2);
    REQUIRE(c4e2->second == 0);

    // agreement with the exact main count on every small graph
    for (int n = 2; n <= 6; ++n)
        for (const Graph& g : all_graphs(n)) {
            if (is_regular(g)) continue;
            bool solvable = check_two_main_equation(g).has_value();
            REQUIRE(solvable == (main_count_exact(g) == 2));
        }
}

TEST_CASE("strongly regular parameter extraction") {
    auto pet = check_srg(petersen());
    REQUIRE(pet.has_value());
    REQUIRE(*pet == SrgParams{10, 3, 0, 1});

    REQUIRE(*check_srg(cycle(5)) == SrgParams{5, 2, 0, 1});
    REQUIRE(*check_srg(complete_multipartite({2, 2})) == SrgParams{4, 2, 0, 2});
    REQUIRE(*check_srg(rook(6)) == SrgParams{36, 10, 4, 2});
    REQUIRE(*check_srg(cliques_union({3, 3})) == SrgParams{6, 2, 1, 0});
    REQUIRE(*check_srg(complete_multipartite({3, 3, 3})) == SrgParams{9, 6, 3, 6});

    REQUIRE_FALSE(check_srg(complete(5)).has_value());
    REQUIRE_FALSE(check_srg(edgeless(4)).has_value());
    REQUIRE_FALSE(check_srg(star(2)).has_value());
    REQUIRE_FALSE(check_srg(cycle(6)).has_value());
    REQUIRE_FALSE(check_srg(delete_vertex(petersen(), 0)).has_value());
}

TEST_CASE("strong verdicts cover all four outcomes") {
    StrongClassification pet = check_strong(petersen());
    REQUIRE(pet.verdict == StrongClassification::Verdict::Both);
    REQUIRE(pet.strong());
    REQUIRE(pet.span_coeffs.has_value());
    REQUIRE(std::get<0>(*pet.span_coeffs) == 0);
    REQUIRE(std::get<1>(*pet.span_coeffs) == 9);
    REQUIRE(std::get<2>(*pet.span_coeffs) == 0);

    StrongClassification s2 = check_strong(star(2));
    REQUIRE(s2.verdict == StrongClassification::Verdict::TwoSeidelEigenvalues);
    REQUIRE(s2.strong());
    REQUIRE_FALSE(s2.srg.has_value());

    StrongClassification s4 = check_strong(star(4));
    REQUIRE(s4.verdict == StrongClassification::Verdict::TwoSeidelEigenvalues);

    StrongClassification r6 = check_strong(rook(6));
    REQUIRE(r6.verdict == StrongClassification::Verdict::StronglyRegular);
    REQUIRE(r6.srg.has_value());
    REQUIRE(r6.span_coeffs.has_value()); // strongly regular implies the span identity

    StrongClassification c5 = check_strong(cycle(5));
    REQUIRE(c5.verdict == StrongClassification::Verdict::StronglyRegular);

    StrongClassification sw = check_strong(seidel_switch(rook(6), rook_row(6, 0)));
    REQUIRE(sw.verdict == StrongClassification::Verdict::NotStrong);
    REQUIRE_FALSE(sw.strong());
    REQUIRE_FALSE(sw.span_coeffs.has_value());

    REQUIRE(check_strong(path(4)).verdict == StrongClassification::Verdict::NotStrong);
    REQUIRE_THROWS_AS(check_strong(Graph(1)), std::invalid_argument);

    REQUIRE(std::string(to_string(pet.verdict)) == "both");
    REQUIRE(std::string(to_string(sw.verdict)) == "not-strong");
}

TEST_CASE("strongly biregular detection") {
    auto s4 = check_strongly_biregular(star(4));
    REQUIRE(s4.has_value());
    REQUIRE(s4->valencies == std::array<int, 2>{1, 4});
    REQUIRE(s4->quotient.equitable);

    auto cp = check_strongly_biregular(cone_over(petersen()));
    REQUIRE(cp.has_value());
    REQUIRE(cp->valencies == std::array<int, 2>{4, 10});

    REQUIRE_FALSE(check_strongly_biregular(petersen()).has_value()); // regular
    REQUIRE_FALSE(check_strongly_biregular(delete_vertex(petersen(), 0)).has_value()); // d=4
    REQUIRE_FALSE(check_strongly_biregular(complete_multipartite({1, 1, 3})).has_value());
    REQUIRE_THROWS_AS(check_strongly_biregular(disjoint_union(star(2), edgeless(1))),
                      std::invalid_argument);
}

TEST_CASE("main eigenvalues reconstructed from seidel data") {
    // star(2): seidel values 2, -1 with multiplicities 1, 2
    auto [m0, m1] = strong_main_eigenvalues(-1.5, 0.0, 1, 2, 3, 2);
    REQUIRE_THAT(m0, WithinAbs(std::sqrt(2.0), kTol));
    REQUIRE_THAT(m1, WithinAbs(-std::sqrt(2.0), kTol));

    // star(4): seidel values 4, -1 with multiplicities 1, 4
    auto [a0, a1] = strong_main_eigenvalues(-2.5, 0.0, 1, 4, 5, 4);
    REQUIRE_THAT(a0, WithinAbs(2.0, kTol));
    REQUIRE_THAT(a1, WithinAbs(-2.0, kTol));

    REQUIRE_THROWS_AS(strong_main_eigenvalues(-1.5, 0.0, 1, 1, 3, 2), std::invalid_argument);
    REQUIRE_THROWS_AS(strong_main_eigenvalues(-1.5, 0.0, 0, 3, 3, 2), std::invalid_argument);

    // end to end from the actual seidel spectrum of star(4)
    EigenReport sd = seidel_spectrum(star(4));
    REQUIRE(sd.groups.size() == 2);
    double t0 = (-1.0 - sd.groups[0].value) / 2.0;
    double t1 = (-1.0 - sd.groups[1].value) / 2.0;
    auto [w0, w1] = strong_main_eigenvalues(t0, t1, sd.groups[0].mult, sd.groups[1].mult, 5,
                                            static_cast<double>(star(4).edge_count()));
    RefinedSpectrum rs = refined_spectrum(star(4));
    REQUIRE(rs.r == 2);
    REQUIRE_THAT(w0, WithinAbs(rs.mains[0], 1e-8));
    REQUIRE_THAT(w1, WithinAbs(rs.mains[1], 1e-8));
}

TEST_CASE("alpha vector of three-eigenvalue graphs") {
    auto pa = alpha_vector(petersen());
    REQUIRE(pa.has_value());
    for (double x : *pa) REQUIRE_THAT(x, WithinAbs(1.0, 1e-8));

    auto sa = alpha_vector(star(2));
    REQUIRE(sa.has_value());
    REQUIRE_THAT((*sa)[0], WithinAbs(std::sqrt(2.0), 1e-8));
    REQUIRE_THAT((*sa)[1], WithinAbs(1.0, 1e-8));
    REQUIRE_THAT((*sa)[2], WithinAbs(1.0, 1e-8));

    auto ca = alpha_vector(cone_over(petersen()));
    REQUIRE(ca.has_value());
    REQUIRE_THAT((*ca)[0], WithinAbs(2.0 * std::sqrt(2.0), 1e-8));
    REQUIRE_THAT((*ca)[1], WithinAbs(std::sqrt(2.0), 1e-8));

    REQUIRE_FALSE(alpha_vector(delete_vertex(petersen(), 0)).has_value());
}

TEST_CASE("two mains iff strongly biregular among three-eigenvalue graphs") {
    RowlinsonReport s4 = check_rowlinson(star(4));
    REQUIRE(s4.main_count == 2);
    REQUIRE(s4.strongly_biregular);
    REQUIRE(s4.consistent);

    RowlinsonReport pet = check_rowlinson(petersen());
    REQUIRE(pet.main_count == 1);
    REQUIRE_FALSE(pet.strongly_biregular);
    REQUIRE(pet.consistent);

    RowlinsonReport cp = check_rowlinson(cone_over(petersen()));
    REQUIRE(cp.main_count == 2);
    REQUIRE(cp.strongly_biregular);
    REQUIRE(cp.consistent);

    RowlinsonReport c4 = check_rowlinson(cycle(4));
    REQUIRE(c4.main_count == 1);
    REQUIRE(c4.consistent);
}

TEST_CASE("disconnected index-(2,2) taxonomy") {
    auto c1 = classify_disconnected(cliques_union({3, 3, 2}));
    REQUIRE(c1.family == DisconnectedClassification::Family::CliquesTwoSizes);
    REQUIRE(c1.clique_sizes == std::vector<int>{3, 3, 2});
    REQUIRE(std::string(to_string(c1.family)) == "cliques-i");

    auto c2 = classify_disconnected(disjoint_union(cycle(4), edgeless(2)));
    REQUIRE(c2.family == DisconnectedClassification::Family::IsolatedPlusMultipartite);
    REQUIRE(c2.isolated_count == 2);
    REQUIRE(c2.part_sizes == std::vector<int>{2, 2});

    // K_{2,2} is also strongly regular; family (ii) must win by order
    auto c2b = classify_disconnected(disjoint_union(edgeless(1), complete_multipartite({2, 2})));
    REQUIRE(c2b.family == DisconnectedClassification::Family::IsolatedPlusMultipartite);
    REQUIRE(c2b.isolated_count == 1);

    auto c3 = classify_disconnected(disjoint_union(edgeless(1), petersen()));
    REQUIRE(c3.family == DisconnectedClassification::Family::IsolatedPlusSrg);
    REQUIRE(c3.isolated_count == 1);
    REQUIRE(c3.srg_a.has_value());
    REQUIRE(*c3.srg_a == SrgParams{10, 3, 0, 1});

    auto c4 = classify_disconnected(disjoint_union(petersen(), complement(petersen())));
    REQUIRE(c4.family == DisconnectedClassification::Family::TwoSrgs);
    REQUIRE(c4.srg_a.has_value());
    REQUIRE(c4.srg_b.has_value());
    REQUIRE(*c4.srg_a == SrgParams{10, 3, 0, 1});
    REQUIRE(*c4.srg_b == SrgParams{10, 6, 3, 4});
    REQUIRE(c4.shared_plains.size() == 2);
    REQUIRE_THAT(c4.shared_plains[0], WithinAbs(1.0, kTol));
    REQUIRE_THAT(c4.shared_plains[1], WithinAbs(-2.0, kTol));

    REQUIRE_THROWS_AS(classify_disconnected(petersen()), std::invalid_argument);
    REQUIRE_THROWS_AS(classify_disconnected(disjoint_union(star(4), edgeless(1))),
                      std::invalid_argument);
}

TEST_CASE("predicted quotient after deleting a vertex of an srg") {
    auto q = predicted_deleted_srg_quotient(SrgParams{10, 3, 0, 1});
    std::vector<std::vector<Rational>> want{{0, 3, 0}, {1, 0, 2}, {0, 1, 2}};
    REQUIRE(q == want);

    auto r = predicted_deleted_srg_quotient(SrgParams{36, 10, 4, 2});
    std::vector<std::vector<Rational>> want2{{0, 10, 0}, {1, 4, 5}, {0, 2, 8}};
    REQUIRE(r == want2);

    REQUIRE_THROWS_AS(predicted_deleted_srg_quotient(SrgParams{10, 3, 0, 5}),
                      std::invalid_argument);

    // deleting any petersen vertex realizes the predicted lower block
    Graph del = delete_vertex(petersen(), 3);
    QuotientMatrix vq = valency_quotient(del);
    REQUIRE(vq.equitable);
    REQUIRE(vq.b[0][0] == q[1][1]);
    REQUIRE(vq.b[0][1] == q[1][2]);
    REQUIRE(vq.b[1][0] == q[2][1]);
    REQUIRE(vq.b[1][1] == q[2][2]);
}
