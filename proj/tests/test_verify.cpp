#include "doctest.h"

#include <algorithm>

#include "g2skein/errors.hpp"
#include "g2skein/verify.hpp"

using namespace g2skein;

namespace {

std::vector<XYPoly> table(const XYPoly& (*coeff)(long), long n)
{
    std::vector<XYPoly> t;
    for (long i = 0; i < n; ++i)
        t.push_back(coeff(i));
    return t;
}

} // namespace

TEST_CASE("elementary sums detect a corrupted table")
{
    auto e = table(e_coeff, 8);
    auto f = table(f_coeff, 15);
    CHECK(check_elementary_sums(e, f).status == Status::Pass);

    f[3] -= XYPoly::x();
    VerifyReport r = check_elementary_sums(e, f);
    CHECK(r.status == Status::Fail);
    REQUIRE(r.witness);
    CHECK(r.witness->find("f_3") != std::string::npos);

    e.pop_back();
    CHECK(check_elementary_sums(e, table(f_coeff, 15)).status == Status::Error);
}

TEST_CASE("transparency reports")
{
    CHECK(check_transparent(5, 10).status == Status::Pass);
    CHECK_THROWS_AS(check_transparent(3, 4), InvalidOrder);
    // m = 4 divides 2n but [2] vanishes there.
    VerifyReport r = check_transparent(2, 4);
    CHECK(r.status == Status::Error);
    REQUIRE(r.witness);
    CHECK(r.witness->find("vanishes") != std::string::npos);
}

TEST_CASE("negative controls")
{
    CHECK(check_not_transparent(P(3), 10).status == Status::Pass);
    // Transparent inputs make the negative control fail.
    CHECK(check_not_transparent(P(5), 10).status == Status::Fail);
    CHECK(check_not_transparent(Q(5), 10).status == Status::Fail);
    CHECK(check_not_transparent(XYPoly(Scalar(1)), 10).status == Status::Fail);
}

TEST_CASE("denominator check")
{
    CHECK(check_denominators().status == Status::Pass);
    CHECK(check_denominators({5}).status == Status::Fail);
}

TEST_CASE("report JSON layout")
{
    VerifyReport r = check_transparent(1, 2);
    auto j = r.to_json();
    std::vector<std::string> keys;
    for (const auto& [k, v] : j.items())
        keys.push_back(k);
    CHECK(keys == std::vector<std::string>{"check", "params", "status", "witness", "elapsed_ms"});
    CHECK(j["check"] == "transparency");
    CHECK(j["status"] == "pass");
    CHECK(j["witness"].is_null());
    CHECK(j["params"]["n"] == 1);
    CHECK(j["params"]["m"] == 2);
    CHECK(r.summary().rfind("PASS", 0) == 0);

    VerifyReport f = check_not_transparent(P(5), 10);
    auto jf = f.to_json();
    CHECK(jf["status"] == "fail");
    CHECK(jf["witness"].is_string());
    CHECK(f.summary().find('\n') != std::string::npos);
}

TEST_CASE("checks are deterministic")
{
    auto strip = [](VerifyReport r) {
        r.elapsed_ms = 0;
        return r.to_json().dump();
    };
    CHECK(strip(check_a11_presentation(20, 4, 7)) == strip(check_a11_presentation(20, 4, 7)));
    CHECK(strip(check_star_consistency(3)) == strip(check_star_consistency(3)));
    CHECK(strip(check_uniqueness(10, {6, 6})) == strip(check_uniqueness(10, {6, 6})));
}

TEST_CASE("search at small bounds")
{
    TransparentSubspace t = search_transparent(10, {10, 10});
    CHECK(t.n == 5);
    CHECK(t.basis.size() == 4);
    CHECK(t.expected.size() == 4);
    CHECK(t.matches_expected);

    TransparentSubspace g = search_transparent(0, {6, 6});
    CHECK_FALSE(g.n);
    REQUIRE(g.basis.size() == 1);
    CHECK(g.basis[0] == PQCoords::term({0, 0}));
    CHECK(g.matches_expected);

    TransparentSubspace one = search_transparent(1, {6, 6});
    CHECK(one.basis.size() == one.columns.size());
    CHECK(one.matches_expected);

    CHECK_THROWS_AS(search_transparent(-1, {4, 4}), InvalidOrder);
    CHECK_THROWS_AS(search_transparent(8, {4, 4}), DenominatorVanishes);
}

TEST_CASE("uniqueness reports")
{
    VerifyReport r = check_uniqueness(14, {7, 7});
    CHECK(r.status == Status::Pass);
    CHECK(r.params["nullspace_dim"] == 2);

    // n = 9: the span is reported, not asserted.
    VerifyReport s = check_uniqueness(18, {9, 9});
    CHECK(s.status == Status::Pass);
    CHECK(s.params["asserted"] == false);

    CHECK(check_uniqueness(4, {4, 4}).status == Status::Error);
}

TEST_CASE("named checks")
{
    const auto& names = check_names();
    CHECK(std::is_sorted(names.begin(), names.end()));
    CHECK(names.size() == 11);
    CHECK(run_named("no_such_check").empty());
    auto nt = run_named("not_transparent");
    REQUIRE(nt.size() == 4);
    for (const auto& r : nt)
        CHECK(r.status == Status::Pass);
    auto tr = run_named("transparency");
    CHECK(tr.size() == 5);
}
