#include <random>

#include "arccurve/error.hpp"
#include "arccurve/io.hpp"
#include "arccurve/pointsets.hpp"
#include "doctest.h"
#include "oracles.hpp"

using namespace arccurve;

namespace {

std::map<std::size_t, std::size_t> oracle_histogram(const PointSet& k) {
    std::vector<Triple> pts;
    for (const auto& p : k) pts.push_back(p.coords);
    std::map<std::size_t, std::size_t> h;
    for (const auto& l : oracle::points(k.field())) ++h[oracle::line_hits(k.field(), pts, l)];
    return h;
}

}  // namespace

TEST_SUITE("pointsets") {

TEST_CASE("construction, order and parameters") {
    const auto f = Field::parse("5");
    const Plane plane(f);
    const auto k = PointSet::from_indices(f, {7, 3, 20});
    CHECK(k.size() == 3);
    CHECK(plane.index(k.points()[0]) == 3);
    CHECK(plane.index(k.points()[2]) == 20);
    CHECK(k.contains(plane.point_at(7)));
    CHECK_FALSE(k.contains(plane.point_at(8)));
    CHECK_THROWS_AS(PointSet::from_indices(f, {1, 1}), InvalidInput);
    CHECK_THROWS_AS(PointSet::from_indices(f, {31}), InvalidInput);

    const auto big = random_pointset(f, 17, 4);
    CHECK(big.t() == 3);
    CHECK(big.alpha() == 2);
    CHECK(big.without(big.points()[0]).size() == 16);
    CHECK(k.united(big).size() <= 20);
}

TEST_CASE("spectrum matches the brute-force histogram") {
    for (auto spec : {"3", "4", "5", "7", "8"}) {
        const auto f = Field::parse(spec);
        for (std::uint64_t seed = 0; seed < 5; ++seed) {
            const auto k = random_pointset(f, 1 + seed * (f->order() + 1) / 2, seed);
            const auto sp = spectrum(k);
            CHECK(sp.histogram == oracle_histogram(k));
            std::size_t lines = 0, incidences = 0;
            for (auto [hits, n] : sp.histogram) lines += n, incidences += hits * n;
            CHECK(lines == Plane(f).size());
            CHECK(incidences == k.size() * (f->order() + 1));
            CHECK(sp.M0 == sp.histogram.rbegin()->first);
            CHECK(sp.m0 >= 1);
        }
    }
    CHECK_THROWS_AS(spectrum(PointSet(Field::parse("3"), {})), InvalidInput);
}

TEST_CASE("generators have the expected line spectra") {
    SUBCASE("full and affine planes") {
        const auto f = Field::parse("7");
        const auto full = generate(f, SetKind::full_plane);
        CHECK(full.size() == 57);
        CHECK(spectrum(full).histogram == std::map<std::size_t, std::size_t>{{8, 57}});
        const auto aff = generate(f, SetKind::affine_plane);
        CHECK(aff.size() == 49);
        CHECK(spectrum(aff).histogram == std::map<std::size_t, std::size_t>{{0, 1}, {7, 56}});
    }
    SUBCASE("conic in odd characteristic") {
        const auto f = Field::parse("7");
        const auto c = generate(f, SetKind::conic_points);
        CHECK(spectrum(c).histogram == std::map<std::size_t, std::size_t>{{0, 21}, {1, 8}, {2, 28}});
        CHECK(generate(f, SetKind::internal_points).size() == 21);
        CHECK(generate(f, SetKind::external_points).size() == 28);
        CHECK(spectrum(generate(f, SetKind::internal_points)).M0 <= 4);
    }
    SUBCASE("hyperoval") {
        const auto f = Field::parse("8");
        const auto h = generate(f, SetKind::conic_plus_nucleus);
        CHECK(h.size() == 10);
        CHECK(is_maximal_arc(h, 2));
        CHECK_THROWS_AS(generate(Field::parse("7"), SetKind::conic_plus_nucleus), InvalidInput);
        CHECK_THROWS_AS(generate(f, SetKind::internal_points), InvalidInput);
    }
    SUBCASE("Hermitian unital") {
        for (auto [spec, r] : {std::pair{"4", 2u}, {"9", 3u}, {"16", 4u}}) {
            const auto f = Field::parse(spec);
            const auto u = generate(f, SetKind::hermitian_unital);
            CHECK(u.size() == r * r * r + 1);
            const auto sp = spectrum(u);
            CHECK(sp.histogram.size() == 2);
            CHECK(sp.histogram.count(1));
            CHECK(sp.histogram.count(r + 1));
        }
        CHECK_THROWS_AS(generate(Field::parse("8"), SetKind::hermitian_unital), InvalidInput);
    }
    SUBCASE("disjoint conic union") {
        const auto f = Field::parse("11");
        for (std::size_t t = 1; t <= 4; ++t) {
            const auto k = generate(f, SetKind::disjoint_conic_union, {t});
            CHECK(k.size() == t * 12);
        }
        const auto cs = disjoint_conic_pencil(f, 4);
        const Plane plane(f);
        for (std::size_t i = 0; i < cs.size(); ++i) {
            CHECK(cs[i].is_nondegenerate());
            for (std::size_t j = i + 1; j < cs.size(); ++j) CHECK(conics_disjoint(plane, cs[i], cs[j]));
        }
    }
}

TEST_CASE("set kind names") {
    for (auto k : {SetKind::full_plane, SetKind::affine_plane, SetKind::conic_points, SetKind::conic_plus_nucleus,
                   SetKind::internal_points, SetKind::external_points, SetKind::hermitian_unital,
                   SetKind::disjoint_conic_union})
        CHECK(parse_set_kind(to_string(k)) == k);
    CHECK_FALSE(parse_set_kind("nonsense").has_value());
}

TEST_CASE("random sets are reproducible") {
    const auto f = Field::parse("9");
    CHECK(random_pointset(f, 30, 77) == random_pointset(f, 30, 77));
    CHECK_FALSE(random_pointset(f, 30, 77) == random_pointset(f, 30, 78));
    CHECK_THROWS_AS(random_pointset(f, 92, 1), InvalidInput);
}

TEST_CASE("Denniston arcs are maximal") {
    for (auto [h, k] : {std::pair{3u, 1u}, {3u, 2u}, {4u, 1u}, {4u, 2u}, {4u, 3u}, {5u, 2u}}) {
        const auto f = Field::make(2, h);
        const auto nu = default_denniston_nu(*f);
        CHECK(f->trace_absolute(nu) == f->one());
        std::vector<FieldElement> basis;
        for (unsigned i = 0; i < k; ++i) basis.push_back(FieldElement{1u << i});
        const auto a = denniston_arc(f, basis, nu);
        const std::size_t n = std::size_t(1) << k;
        CHECK(a.size() == (n - 1) * f->order() + n);
        CHECK(is_maximal_arc(a, n));
        CHECK_NOTHROW(io::validate_maximal_arc(a, n));
        CHECK(additive_span(*f, basis).size() == n);
    }
    const auto f = Field::make(2, 4);
    const std::vector<FieldElement> dep{FieldElement{1}, FieldElement{1}};
    CHECK_THROWS_AS(denniston_arc(f, dep, default_denniston_nu(*f)), InvalidInput);
    const std::vector<FieldElement> b{FieldElement{1}};
    CHECK_THROWS_AS(denniston_arc(f, b, f->zero()), InvalidInput);  // trace 0
    CHECK_THROWS_AS(denniston_arc(Field::parse("9"), b, FieldElement{1}), InvalidInput);
}

TEST_CASE("maximal arc check rejects near misses") {
    const auto f = Field::make(2, 3);
    const auto h = generate(f, SetKind::conic_plus_nucleus);
    CHECK_FALSE(is_maximal_arc(h.without(h.points()[0]), 2));
    CHECK_FALSE(is_maximal_arc(h, 3));
    CHECK_THROWS_AS(io::validate_maximal_arc(h.without(h.points()[0]), 2), ValidationError);
}

TEST_CASE("Thas arcs need q = r^2 with r an odd power of 2") {
    CHECK_THROWS_AS(thas_arc(Field::parse("8")), InvalidInput);
    CHECK_THROWS_AS(thas_arc(Field::parse("16")), InvalidInput);
    CHECK_THROWS_AS(thas_arc(Field::parse("9")), InvalidInput);
}

TEST_CASE("Thas arcs in PG(2,64)" * doctest::timeout(60)) {
    const auto small = thas_arc_pg2_64(SpreadClass::small_torus);
    CHECK(small.size() == 456);
    CHECK(is_maximal_arc(small, 8));
    CHECK(has_vertex_symmetry(small, 5));
    CHECK_FALSE(has_vertex_symmetry(small, 13));
    const auto large = thas_arc_pg2_64(SpreadClass::large_torus);
    CHECK(is_maximal_arc(large, 8));
    CHECK(has_vertex_symmetry(large, 13));
    CHECK_FALSE(has_vertex_symmetry(large, 5));
}

TEST_CASE("vertex symmetry of Denniston arcs") {
    // x^2 + xy + nu y^2 is preserved by the multiplicative norm-1 group of order q+1 = 17.
    const auto f = Field::make(2, 4);
    const std::vector<FieldElement> basis{FieldElement{1}, FieldElement{2}};
    const auto a = denniston_arc(f, basis, default_denniston_nu(*f));
    CHECK(has_vertex_symmetry(a, 17));
    CHECK(has_vertex_symmetry(a, 1));
}

}  // TEST_SUITE
