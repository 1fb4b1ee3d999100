#include <doctest.h>

#include <tabsieve/io.hpp>

using namespace tabsieve;

TEST_CASE("partition and tableau JSON round trips") {
    CHECK(to_json(Partition({4, 2, 2})) == json::parse("[4,2,2]"));
    CHECK(to_json(Partition()) == json::parse("[]"));

    Tableau t(SkewShape(Partition({3, 2}), Partition({1})), {{1, 2}, {1, 1}});
    json j = to_json(t);
    CHECK(j.at("outer") == json::parse("[3,2]"));
    CHECK(j.at("inner") == json::parse("[1]"));
    CHECK(j.at("rows") == json::parse("[[1,2],[1,1]]"));
    CHECK(tableau_from_json(j) == t);
}

TEST_CASE("plane partition, GT-pattern and matrix JSON") {
    PlanePartition p({{1, 1, 2}, {2, 2, 3}}, 4);
    CHECK(to_json(p) == json::parse("[[1,1,2],[2,2,3]]"));

    GTPattern g({{3, 0}, {1}});
    CHECK(to_json(g) == json::parse("[[3,0],[1]]"));

    ContingencyMatrix m;
    m.entries = {{2, 0}, {0, 2}};
    CHECK(to_json(m) == json::parse("[[2,0],[0,2]]"));
}

TEST_CASE("biword JSON round trip") {
    Biword w;
    w.pairs = {{1, 2}, {1, 4}, {2, 1}};
    json j = to_json(w);
    CHECK(j.at("top") == json::parse("[1,1,2]"));
    CHECK(j.at("bottom") == json::parse("[2,4,1]"));
    Biword back = biword_from_json(j);
    CHECK(back.pairs == w.pairs);
    CHECK_THROWS_AS(biword_from_json(json{{"top", {1}}, {"bottom", {1, 2}}}),
                    std::invalid_argument);
}

TEST_CASE("polynomial JSON keeps exact big coefficients and Laurent exponents") {
    QPoly f = QPoly::term(BigInt("123456789012345678901234567890"), -3) +
              QPoly::term(-2, 5);
    json j = to_json(f);
    CHECK(j.at("-3") == "123456789012345678901234567890");
    CHECK(j.at("5") == "-2");
    CHECK(qpoly_from_json(j) == f);
    CHECK(qpoly_from_json(to_json(QPoly::zero())) == QPoly::zero());
}

TEST_CASE("check report JSON") {
    CspInstance inst = named_instance("stretched-hooks", {.a = 1, .b = 2, .n = 2});
    json j = to_json(inst.run());
    CHECK(j.at("order") == 3);
    CHECK(j.at("verdict") == "pass");
    REQUIRE(j.at("rows").size() == 3);
    CHECK(j.at("rows")[0].at("d") == 0);
    CHECK(j.at("rows")[0].at("fixed") == 6);
    CHECK(j.at("rows")[0].at("eval") == "6");
    CHECK(j.at("rows")[1].at("ok") == true);

    CspInstance bi = named_instance("two-row-bicsp", {.b = 2, .m = 4});
    json jb = to_json(bi.run());
    CHECK(jb.at("verdict") == "pass");
    CHECK(jb.at("order2") == 4);
    CHECK(jb.at("rows")[0].contains("i"));
    CHECK(jb.at("rows")[0].contains("j"));
}
