#include <doctest.h>

#include <map>
#include <set>

#include <tabsieve/charge.hpp>
#include <tabsieve/kostka.hpp>
#include <tabsieve/promotion.hpp>
#include <tabsieve/skewrsk.hpp>

using namespace tabsieve;

namespace {

const Partition kNu211({2, 1, 1});

Tableau worked_example() {
    return Tableau(sm_shape(kNu211, 3),
                   {{1, 1, 2, 3, 3, 4}, {1, 3, 4}, {2, 2, 4}});
}

}  // namespace

TEST_CASE("matrix encoding of the worked example") {
    Tableau t = worked_example();
    REQUIRE(is_sm_tableau(t, kNu211, 3));
    ContingencyMatrix M = tableau_to_matrix(t, kNu211, 3);
    CHECK(M.entries == std::vector<std::vector<int>>{
                           {2, 1, 2, 1}, {1, 0, 1, 1}, {0, 2, 0, 1}});
    CHECK(matrix_to_tableau(M, kNu211, 3) == t);

    Biword w = matrix_to_biword(M);
    CHECK(w.top() == Word({1, 1, 1, 2, 2, 2, 3, 3, 3, 3, 3, 3}));
    CHECK(w.bottom() == Word({2, 2, 4, 1, 3, 4, 1, 1, 2, 3, 3, 4}));
    CHECK(w.bottom() == reading_word(t));
}

TEST_CASE("matrix round trips over a whole census") {
    Partition nu({2, 1});
    for (const Tableau& t : enumerate_sm(nu, 2)) {
        ContingencyMatrix M = tableau_to_matrix(t, nu, 2);
        CHECK(matrix_to_tableau(M, nu, 2) == t);
        // row sums n*nu_i, column sums n
        for (std::size_t r = 0; r < M.num_rows(); ++r) {
            int s = 0;
            for (int v : M.entries[r]) s += v;
            CHECK(s == 2 * nu.parts()[r]);
        }
        for (std::size_t j = 0; j < M.num_cols(); ++j) {
            int s = 0;
            for (std::size_t r = 0; r < M.num_rows(); ++r) s += M.entries[r][j];
            CHECK(s == 2);
        }
    }
}

TEST_CASE("matrix census matches tableau census") {
    for (auto [nu, n] : std::vector<std::pair<Partition, int>>{
             {Partition({2, 1}), 2}, {Partition({1, 1, 1}), 2}, {Partition({2, 2}), 1},
             {Partition({2, 1, 1}), 1}}) {
        auto tabs = enumerate_sm(nu, n);
        auto mats = enumerate_matrices(nu, n);
        CHECK(tabs.size() == mats.size());
        std::set<ContingencyMatrix> from_tabs;
        for (const Tableau& t : tabs) from_tabs.insert(tableau_to_matrix(t, nu, n));
        CHECK(from_tabs.size() == tabs.size());
        std::set<ContingencyMatrix> all(mats.begin(), mats.end());
        CHECK(from_tabs == all);
    }
}

TEST_CASE("RSK basics") {
    // single-letter and strictly increasing words insert trivially
    Biword w;
    w.pairs = {{1, 2}};
    auto [p1, q1] = rsk(w);
    CHECK(p1.rows() == std::vector<std::vector<int>>{{2}});
    CHECK(q1.rows() == std::vector<std::vector<int>>{{1}});

    Biword inc;
    inc.pairs = {{1, 1}, {2, 2}, {3, 3}};
    auto [p2, q2] = rsk(inc);
    CHECK(p2.rows() == std::vector<std::vector<int>>{{1, 2, 3}});

    Biword dec;
    dec.pairs = {{1, 3}, {2, 2}, {3, 1}};
    auto [p3, q3] = rsk(dec);
    CHECK(p3.rows() == std::vector<std::vector<int>>{{1}, {2}, {3}});
    CHECK(q3.rows() == std::vector<std::vector<int>>{{1}, {2}, {3}});
}

TEST_CASE("RSK on the worked example biword") {
    Tableau t = worked_example();
    Biword w = matrix_to_biword(tableau_to_matrix(t, kNu211, 3));
    auto [P, Q] = rsk(w);
    CHECK(P.is_semistandard());
    CHECK(Q.is_semistandard());
    CHECK(P.shape() == Q.shape());
    CHECK(charge(P) == charge(t));
}

TEST_CASE("RSK preserves charge across whole censuses") {
    for (auto [nu, n] : std::vector<std::pair<Partition, int>>{
             {Partition({2, 1}), 2}, {Partition({1, 1, 1}), 2}, {Partition({2, 1, 1}), 1}}) {
        for (const Tableau& t : enumerate_sm(nu, n)) {
            auto [P, Q] = rsk(matrix_to_biword(tableau_to_matrix(t, nu, n)));
            CHECK(charge(P) == charge(t));
            CHECK(P.shape() == Q.shape());
            CHECK(P.is_semistandard());
        }
    }
}

TEST_CASE("RSK insertion-shape census refines the skew charge polynomial") {
    // summing q^charge over SM(nu,n) equals summing, over straight shapes,
    // the charge polynomials of the RSK images
    Partition nu({2, 1});
    int n = 2;
    QPoly direct;
    std::map<Partition, QPoly> by_shape;
    for (const Tableau& t : enumerate_sm(nu, n)) {
        direct.add_term(charge(t), 1);
        auto [P, Q] = rsk(matrix_to_biword(tableau_to_matrix(t, nu, n)));
        by_shape[P.shape().outer()].add_term(charge(P), 1);
    }
    QPoly total;
    for (const auto& [shape, poly] : by_shape) total += poly;
    CHECK(total == direct);
}

TEST_CASE("column rotation identities") {
    ContingencyMatrix M;
    M.entries = {{2, 1, 2, 1}, {1, 0, 1, 1}, {0, 2, 0, 1}};
    CHECK(rotate_columns(M, 0) == M);
    CHECK(rotate_columns(M, 4) == M);
    CHECK(rotate_columns(rotate_columns(M, 1), 3) == M);
    CHECK(rotate_columns(M, 1).entries ==
          std::vector<std::vector<int>>{{1, 2, 1, 2}, {0, 1, 1, 1}, {2, 0, 1, 0}});
}

TEST_CASE("promotion is column rotation on the matrix side") {
    for (auto [nu, n] : std::vector<std::pair<Partition, int>>{
             {Partition({2, 1}), 2}, {Partition({1, 1, 1}), 2}, {Partition({2, 2}), 1},
             {Partition({2, 1, 1}), 2}}) {
        int m = static_cast<int>(nu.size());
        for (const Tableau& t : enumerate_sm(nu, n)) {
            ContingencyMatrix M = tableau_to_matrix(t, nu, n);
            CHECK(matrix_to_tableau(rotate_columns(M, 1), nu, n) == promote(t, m));
        }
    }
}
