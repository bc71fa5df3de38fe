#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>

#include "curvecount/cache.hpp"
#include "curvecount/igusa.hpp"
#include "curvecount/serialize.hpp"

#include <sstream>

using namespace curvecount;

namespace {

std::filesystem::path temp_dir(const std::string& tag) {
    auto p = std::filesystem::temp_directory_path() /
             ("curvecount-test-" + tag + "-" + std::to_string(::getpid()));
    std::filesystem::remove_all(p);
    std::filesystem::create_directories(p);
    return p;
}

} // namespace

TEST_CASE("rational string roundtrip") {
    CHECK(Rational::parse(Rational(-3, 7).to_string()) == Rational(-3, 7));
    CHECK(Rational::parse("24/1").to_string() == "24/1");
}

TEST_CASE("series JSON roundtrip preserves box metadata") {
    RSeries wp = weierstrass_p(-4, 4, 3);
    Json j = series_to_json(wp);
    RSeries back = series_from_json(j);
    CHECK(back.profile() == wp.profile());
    CHECK(back == wp);
    CHECK(series_to_json(back).dump() == j.dump());
    // terms are sorted by exponent vector
    CHECK(j.at("terms").is_array());
    CHECK(j.at("profile").at(0).at("var") == "p");
}

TEST_CASE("m-table JSON roundtrip is bit-identical") {
    IgusaConfig cfg{1, 2, -4, 4};
    QuadraticCoeffTable c = c_table(8);
    MTable t = igusa_m_table(cfg, c);
    Json j = table_to_json(t);
    MTable back = m_table_from_json(j);
    CHECK(table_to_json(back).dump() == j.dump());
    CHECK(back.at(1, 1, 1) == t.at(1, 1, 1));
    CHECK(back.window_lo() == t.window_lo());
}

TEST_CASE("quadratic and euler table roundtrips") {
    QuadraticCoeffTable c = c_table(12);
    Json j = table_to_json(c);
    QuadraticCoeffTable back = quadratic_table_from_json(j);
    CHECK(back.at(0) == 20);
    CHECK(back.certified_bound() == c.certified_bound());
    CHECK(table_to_json(back).dump() == j.dump());

    EulerTable a = euler_hilb_k3(5);
    EulerTable a2 = euler_table_from_json(table_to_json(a));
    CHECK(a2.at(3) == 3200);
}

TEST_CASE("csv export shape") {
    MRowTable m = m_direct(1, -2, 2);
    std::string csv = table_to_csv(m);
    CHECK(csv.rfind("d,n,value\n", 0) == 0);
    CHECK(csv.find("0,1,-24/1\n") != std::string::npos);
    CHECK(csv.find("1,1,-600/1\n") != std::string::npos);
}

TEST_CASE("golden table exports") {
    auto read = [](const std::string& name) {
        std::ifstream f(std::string(FIXTURE_DIR) + "/" + name);
        REQUIRE(f.good());
        std::ostringstream os;
        os << f.rdbuf();
        return os.str();
    };
    CHECK(table_to_csv(c_table(16)) == read("c_table_16.csv"));
    CHECK(table_to_csv(m_direct(2, -4, 4)) == read("m2_d2_n4.csv"));
    CHECK(table_to_csv(euler_hilb_k3(6)) == read("euler_d6.csv"));
    IgusaConfig cfg{1, 1, -3, 3};
    CHECK(table_to_json(igusa_m_table(cfg, c_table(4))).dump(2) + "\n" ==
          read("m3_h1_d1_n3.json"));
}

TEST_CASE("cache roundtrip, versioning and corruption") {
    auto dir = temp_dir("cache");
    TableCache cache(dir);
    Json payload = table_to_json(m_direct(1, -2, 2));
    CHECK(!cache.load("key-a").has_value());
    cache.store("key-a", payload);
    auto hit = cache.load("key-a");
    REQUIRE(hit.has_value());
    CHECK(hit->dump() == payload.dump());
    // a different key with the same content misses
    CHECK(!cache.load("key-b").has_value());

    // corrupt the entry: load degrades to a miss
    std::filesystem::path file = dir / (TableCache::hash_key("key-a") + ".json");
    {
        std::ofstream f(file);
        f << "{ not json";
    }
    CHECK(!cache.load("key-a").has_value());

    // version skew degrades to a miss
    {
        Json stale{{"version", TableCache::kVersion + 1}, {"key", "key-a"}, {"payload", 1}};
        std::ofstream f(file);
        f << stale.dump();
    }
    CHECK(!cache.load("key-a").has_value());

    TableCache disabled;
    CHECK(!disabled.enabled());
    CHECK(!disabled.load("key-a").has_value());
    std::filesystem::remove_all(dir);
}
