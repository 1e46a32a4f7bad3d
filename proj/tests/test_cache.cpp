#include <doctest.h>

#include <sstream>

#include "naples/coefficient.hpp"
#include "naples/engine.hpp"

using namespace naples;

TEST_CASE("kind and provenance names round-trip") {
    for (Kind kind : {Kind::T, Kind::t, Kind::ThetaEq, Kind::ThetaLeq, Kind::Theta, Kind::V,
                      Kind::V0, Kind::V0Complete}) {
        CHECK(parse_kind(kind_name(kind)) == kind);
    }
    CHECK_FALSE(parse_kind("Bogus").has_value());
    for (Provenance p : {Provenance::Recursion, Provenance::Oracle, Provenance::ClosedForm}) {
        CHECK(parse_provenance(provenance_name(p)) == p);
    }
}

TEST_CASE("table save/load is bit-exact") {
    CoefficientTable table;
    table.store({Kind::T, 8, 1}, BigInt(8266240), Provenance::Recursion);
    table.store({Kind::Theta, 3, 1, 2, 2}, BigInt(3), Provenance::Oracle);
    table.store({Kind::V0Complete, 16, 3}, BigInt("123456789012345678901234567890"),
                Provenance::Recursion);
    table.store({Kind::V0Complete, 16, 3}, BigInt("123456789012345678901234567890"),
                Provenance::Oracle);

    std::ostringstream first;
    table.save(first);

    CoefficientTable loaded;
    std::istringstream in(first.str());
    loaded.load(in);
    CHECK(loaded.size() == table.size());
    CHECK(loaded.find({Kind::Theta, 3, 1, 2, 2}) == BigInt(3));
    CHECK(loaded.find({Kind::V0Complete, 16, 3}) == BigInt("123456789012345678901234567890"));

    std::ostringstream second;
    loaded.save(second);
    CHECK(first.str() == second.str());
}

TEST_CASE("loader skips comments and unknown kinds with a warning") {
    CoefficientTable table;
    std::istringstream in(
        "# a comment\n"
        "T\t3\t1\t-\t-\t23\trecursion\n"
        "Xi\t3\t1\t-\t-\t99\trecursion\n"
        "theta\t3\t1\t2\t2\t3\toracle\n");
    std::ostringstream warnings;
    table.load(in, &warnings);
    CHECK(table.size() == 2);
    CHECK(table.find({Kind::T, 3, 1}) == BigInt(23));
    CHECK(warnings.str().find("unknown kind 'Xi'") != std::string::npos);
}

TEST_CASE("loader rejects malformed lines") {
    CoefficientTable table;
    std::istringstream short_line("T\t3\t1\t23\n");
    CHECK_THROWS_AS(table.load(short_line), std::invalid_argument);
    std::istringstream bad_value("T\t3\t1\t-\t-\ttwelve\trecursion\n");
    CHECK_THROWS_AS(table.load(bad_value), std::invalid_argument);
    std::istringstream bad_prov("T\t3\t1\t-\t-\t23\tguess\n");
    CHECK_THROWS_AS(table.load(bad_prov), std::invalid_argument);
}

TEST_CASE("conflicting values for one key are an integrity failure") {
    CoefficientTable table;
    table.store({Kind::T, 3, 1}, BigInt(23), Provenance::Recursion);
    CHECK_THROWS_AS(table.store({Kind::T, 3, 1}, BigInt(24), Provenance::Oracle),
                    std::logic_error);
    CHECK_NOTHROW(table.store({Kind::T, 3, 1}, BigInt(23), Provenance::Oracle));
    CHECK_THROWS_AS(table.store({Kind::T, 3, 2}, BigInt(-1), Provenance::Oracle),
                    std::invalid_argument);
}

TEST_CASE("a warmed engine reuses loaded values") {
    Engine first;
    first.T_coeff(8, 3);
    std::ostringstream out;
    first.table().save(out);

    Engine second;
    std::istringstream in(out.str());
    second.table().load(in);
    CHECK(second.T_coeff(8, 3) == first.T_coeff(8, 3));
}
