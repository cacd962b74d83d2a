#include <doctest.h>

#include <fstream>
#include <set>
#include <sstream>

#include <wttp/instance.hpp>

#include "testutil.hpp"

using namespace wttp;

namespace {
std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    REQUIRE(in.good());
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}
}  // namespace

TEST_CASE("parse hand-built 4-city 3-item instance") {
    TtpInstance inst = parse_ttp_instance(testutil::tiny_ttp_text());
    CHECK(inst.n == 4);
    CHECK(inst.item_count() == 3);
    CHECK(inst.name == "tiny4");
    CHECK(inst.capacity_file == 20.0);
    CHECK(inst.v_min == 0.1);
    CHECK(inst.v_max == 1.0);
    CHECK(inst.renting_rate == 0.5);
    CHECK(inst.edge_weight_type == EdgeWeightType::CEIL_2D);
    CHECK(inst.items[2].profit == 30.0);
    CHECK(inst.items[2].weight == 7.0);
    CHECK(inst.items[2].city == 4);
}

TEST_CASE("parse berlin52-derived TTP file") {
    TtpInstance inst = parse_ttp_instance(
        slurp(std::string(WTTP_DATA_DIR) + "/berlin52_n255_bounded-strongly-corr_05.ttp"));
    CHECK(inst.n == 52);
    CHECK(inst.item_count() == 255);
    CHECK(inst.edge_weight_type == EdgeWeightType::CEIL_2D);
}

TEST_CASE("item section shorter than header count is an error naming the section") {
    std::string text = testutil::tiny_ttp_text();
    text = text.substr(0, text.rfind("3 30"));
    CHECK_THROWS_WITH_AS(parse_ttp_instance(text),
                         doctest::Contains("ITEMS SECTION"), ParseError);
}

TEST_CASE("parse errors name the offending line") {
    std::string text = testutil::tiny_ttp_text();
    SUBCASE("unknown edge weight type") {
        text.replace(text.find("CEIL_2D"), 7, "GEO_abc");
        CHECK_THROWS_WITH_AS(parse_ttp_instance(text),
                             doctest::Contains("EDGE_WEIGHT_TYPE"), ParseError);
    }
    SUBCASE("malformed header key") {
        text.insert(0, "BOGUS KEY: 1\n");
        CHECK_THROWS_WITH_AS(parse_ttp_instance(text), doctest::Contains("line 1"), ParseError);
    }
    SUBCASE("non-numeric coordinate") {
        text.replace(text.find("2 3 4"), 5, "2 x 4");
        CHECK_THROWS_AS(parse_ttp_instance(text), ParseError);
    }
    SUBCASE("dimension mismatch with coord section") {
        text.replace(text.find("DIMENSION: 4"), 12, "DIMENSION: 5");
        CHECK_THROWS_AS(parse_ttp_instance(text), ParseError);
    }
}

TEST_CASE("distance conventions") {
    TtpInstance inst;
    inst.n = 2;
    inst.coords = {{0, 0}, {3, 4}};
    inst.edge_weight_type = EdgeWeightType::CEIL_2D;
    CHECK(inst.distance(1, 2) == 5.0);
    inst.coords = {{0, 0}, {1, 1}};
    CHECK(inst.distance(1, 2) == 2.0);  // ceil(sqrt 2)
    inst.edge_weight_type = EdgeWeightType::EUC_2D;
    CHECK(inst.distance(1, 2) == 1.0);  // nint(sqrt 2)
    CHECK_THROWS_AS(inst.distance(0, 1), std::out_of_range);
    CHECK_THROWS_AS(inst.distance(1, 3), std::out_of_range);
}

TEST_CASE("distance symmetry and identity on random instances") {
    for (std::uint64_t seed : {1ULL, 2ULL, 3ULL}) {
        TtpInstance inst = testutil::random_instance(20, 1, seed);
        for (int i = 1; i <= inst.n; ++i) {
            CHECK(inst.distance(i, i) == 0.0);
            for (int j = i + 1; j <= inst.n; ++j)
                CHECK(inst.distance(i, j) == inst.distance(j, i));
        }
    }
}

TEST_CASE("instance serialize/parse round-trip") {
    for (std::uint64_t seed = 1; seed <= 10; ++seed) {
        TtpInstance inst = testutil::random_instance(8, 2, seed);
        TtpInstance back = parse_ttp_instance(serialize_ttp_instance(inst));
        CHECK(back.n == inst.n);
        CHECK(back.name == inst.name);
        CHECK(back.v_min == inst.v_min);
        CHECK(back.v_max == inst.v_max);
        CHECK(back.renting_rate == inst.renting_rate);
        CHECK(back.capacity_file == inst.capacity_file);
        REQUIRE(back.items.size() == inst.items.size());
        for (std::size_t k = 0; k < inst.items.size(); ++k) {
            CHECK(back.items[k].profit == inst.items[k].profit);
            CHECK(back.items[k].weight == inst.items[k].weight);
            CHECK(back.items[k].city == inst.items[k].city);
        }
        for (int i = 0; i < inst.n; ++i) {
            CHECK(back.coords[i].x == inst.coords[i].x);
            CHECK(back.coords[i].y == inst.coords[i].y);
        }
    }
}

TEST_CASE("tour parse rotates city 1 to the front") {
    Tour t = parse_tour_file("TOUR_SECTION\n2\n3\n1\n-1\n", 3);
    CHECK(t.order == std::vector<int>{1, 2, 3});
}

TEST_CASE("tour parse errors") {
    CHECK_THROWS_AS(parse_tour_file("TOUR_SECTION\n2\n1\n2\n-1\n", 3), ParseError);
    CHECK_THROWS_AS(parse_tour_file("TOUR_SECTION\n2\n1\n-1\n", 3), ParseError);
    CHECK_THROWS_AS(parse_tour_file("2\n1\n3\n", 3), ParseError);  // no TOUR_SECTION
    CHECK_THROWS_AS(parse_tour_file("TOUR_SECTION\n1\n2\n4\n-1\n", 3), ParseError);
}

TEST_CASE("eil51 optimal tour file parses to a 51-city tour") {
    Tour t = parse_tour_file(slurp(std::string(WTTP_DATA_DIR) + "/eil51.opt.tour"), 51);
    CHECK(t.size() == 51);
    CHECK(t.is_valid(51));
}

TEST_CASE("tour rotation preserves the undirected edge set") {
    auto edge_set = [](const std::vector<int>& order) {
        std::set<std::pair<int, int>> es;
        for (std::size_t i = 0; i < order.size(); ++i) {
            int u = order[i], v = order[(i + 1) % order.size()];
            es.insert({std::min(u, v), std::max(u, v)});
        }
        return es;
    };
    wttp::Rng rng(7);
    for (int rep = 0; rep < 20; ++rep) {
        int n = 4 + static_cast<int>(rng.uniform_index(10));
        std::vector<int> raw(static_cast<std::size_t>(n));
        for (int i = 0; i < n; ++i) raw[i] = i + 1;
        for (std::size_t i = raw.size() - 1; i >= 1; --i)
            std::swap(raw[i], raw[rng.uniform_index(i + 1)]);
        std::ostringstream os;
        os << "TOUR_SECTION\n";
        for (int c : raw) os << c << "\n";
        os << "-1\n";
        Tour t = parse_tour_file(os.str(), n);
        CHECK(t.order[0] == 1);
        CHECK(edge_set(t.order) == edge_set(raw));
    }
}

TEST_CASE("tour serialize round-trips through the parser") {
    Tour t{{1, 4, 2, 5, 3}};
    Tour back = parse_tour_file(serialize_tour(t, "t5"), 5);
    CHECK(back.order == t.order);
}
