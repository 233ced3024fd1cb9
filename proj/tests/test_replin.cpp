#include "doctest.h"

#include "oracles.hpp"

using namespace arknit;

namespace {

const Field Q = Field::rationals();

QuiverPtr a2() { return truncate_ptr(linear_a(2), 0); }

}  // namespace

TEST_CASE("standard objects on 1 -> 2") {
  auto q = a2();
  auto p1 = projective_rep(q, "1", Q), p2 = projective_rep(q, "2", Q);
  CHECK(p1.dims() == DimVector{1, 1});
  CHECK(p1.map(0).is_identity());
  CHECK(p2.dims() == DimVector{0, 1});
  CHECK(injective_rep(q, "1", Q).dims() == DimVector{1, 0});
  CHECK(injective_rep(q, "2", Q).dims() == DimVector{1, 1});
  CHECK(simple_rep(q, "1", Q).dims() == injective_rep(q, "1", Q).dims());
}

TEST_CASE("Hom between projectives counts paths") {
  auto q = a2();
  auto p1 = projective_rep(q, "1", Q), p2 = projective_rep(q, "2", Q);
  CHECK(hom_dim(p1, p2) == 0);
  CHECK(hom_dim(p2, p1) == 1);
  auto s1 = simple_rep(q, "1", Q);
  CHECK(hom_dim(s1, s1) == 1);
  auto tri = truncate_ptr(finite_quiver({"1", "2", "3"}, {{"1", "2"}, {"2", "3"}, {"1", "3"}}), 0);
  CHECK(hom_dim(projective_rep(tri, "3", Q), projective_rep(tri, "1", Q)) == 2);
  for (const auto& f : hom_basis(projective_rep(tri, "3", Q), projective_rep(tri, "1", Q))) CHECK(f.is_intertwining());
}

TEST_CASE("path basis Hom on all small acyclic quivers") {
  auto quivers = oracle::all_small_acyclic_quivers(4, 5);
  CHECK(quivers.size() > 20);
  for (const auto& fq : quivers) {
    auto q = make_quiver(fq);
    std::vector<Representation> ps;
    for (const auto& v : fq.vertices) ps.push_back(projective_rep(q, v, Q));
    for (std::size_t x = 0; x < ps.size(); ++x)
      for (std::size_t y = 0; y < ps.size(); ++y)
        CHECK(hom_dim(ps[x], ps[y]) == oracle::path_count(fq, fq.vertices[y], fq.vertices[x]));
  }
}

TEST_CASE("Ext on 1 -> 2") {
  auto q = a2();
  auto s1 = simple_rep(q, "1", Q), s2 = simple_rep(q, "2", Q);
  CHECK(ext1_dim(s1, s2) == 1);
  CHECK(ext1_dim(s2, s1) == 0);
  ExtSpace e(s1, s2);
  CHECK(e.dim() == 1);
  auto ext = extension(s1, s2, e.basis()[0]);
  CHECK(ext.middle.dims() == DimVector{1, 1});
  CHECK(ext.inclusion.is_intertwining());
  CHECK(ext.projection.is_intertwining());
  CHECK(find_isomorphism(ext.middle, projective_rep(q, "1", Q)).has_value());
}

TEST_CASE("Euler identity and projective Ext vanishing on random data") {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 200; ++trial) {
    std::uniform_int_distribution<std::size_t> nv(1, 5);
    auto fq = oracle::random_acyclic_quiver(rng, nv(rng), 6);
    auto q = make_quiver(fq);
    auto x = oracle::random_rep(rng, q, Q, 4), y = oracle::random_rep(rng, q, Q, 4);
    std::map<std::string, long> dx, dy;
    for (std::size_t v = 0; v < fq.vertices.size(); ++v) {
      dx[fq.vertices[v]] = static_cast<long>(x.dim(v));
      dy[fq.vertices[v]] = static_cast<long>(y.dim(v));
    }
    long hom = static_cast<long>(hom_dim(x, y));
    long ext = static_cast<long>(ExtSpace(x, y).dim());
    CHECK(hom - ext == oracle::euler(fq, dx, dy));
    CHECK(static_cast<long>(ext1_dim(x, y)) == ext);
    for (const auto& v : fq.vertices) CHECK(ext1_dim(projective_rep(q, v, Q), y) == 0);
  }
}

TEST_CASE("radicals of projectives") {
  auto q = a2();
  auto r1 = radical_of_projective(q, "1", Q);
  CHECK(find_isomorphism(r1.source, projective_rep(q, "2", Q)).has_value());
  CHECK(r1.is_mono());
  CHECK(radical_of_projective(q, "2", Q).source.is_zero());
  auto vee = truncate_ptr(finite_quiver({"1", "2", "3"}, {{"1", "2"}, {"1", "3"}}), 0);
  auto rv = radical_of_projective(vee, "1", Q);
  CHECK(rv.source.dims() == DimVector{0, 1, 1});
  auto tri = truncate_ptr(finite_quiver({"1", "2", "3"}, {{"1", "2"}, {"2", "3"}, {"1", "3"}}), 0);
  auto rt = radical_of_projective(tri, "1", Q);
  CHECK(rt.source.total_dim() == 3);
  CHECK(rt.is_mono());
  CHECK(rt.is_intertwining());
  auto rad = radical(projective_rep(tri, "1", Q));
  CHECK(rad.source.total_dim() == 3);
}

TEST_CASE("decomposition") {
  auto q = a2();
  auto p1 = projective_rep(q, "1", Q), s1 = simple_rep(q, "1", Q), s2 = simple_rep(q, "2", Q);
  auto d = decompose(direct_sum_rep({p1, p1}));
  REQUIRE(d.summands.size() == 1);
  CHECK(d.summands[0].multiplicity == 2);
  CHECK(find_isomorphism(d.summands[0].rep, p1).has_value());
  CHECK(compose(d.to_sum, d.from_sum).components[0].is_identity());
  CHECK(compose(d.from_sum, d.to_sum).components[1].is_identity());

  auto ds = decompose(direct_sum_rep({s1, s2}));
  CHECK(ds.summands.size() == 2);
  for (const auto& s : ds.summands) CHECK(is_indecomposable(s.rep));

  CHECK(is_indecomposable(p1));
  CHECK_FALSE(is_indecomposable(direct_sum_rep({s1, s1})));
}

TEST_CASE("decomposition of random representations is a partition") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 40; ++trial) {
    std::uniform_int_distribution<std::size_t> nv(1, 4);
    auto q = make_quiver(oracle::random_acyclic_quiver(rng, nv(rng), 4));
    auto x = oracle::random_rep(rng, q, Q, 2);
    auto sum_with = direct_sum_rep({x, x});
    for (const auto& rep : {x, sum_with}) {
      auto d = decompose(rep);
      DimVector total(q->vertex_count(), 0);
      for (const auto& s : d.summands)
        for (std::size_t v = 0; v < total.size(); ++v) total[v] += s.multiplicity * s.rep.dim(v);
      CHECK(total == rep.dims());
      auto round = compose(d.from_sum, d.to_sum);
      for (const auto& c : round.components) CHECK(c.is_identity());
      CHECK(d.to_sum.is_intertwining());
      for (const auto& s : d.summands) CHECK(is_indecomposable(s.rep));
    }
  }
}

TEST_CASE("decomposition over a prime field") {
  const Field F = Field::prime(32003);
  auto q = a2();
  auto s1 = simple_rep(q, "1", F), p1 = projective_rep(q, "1", F);
  auto d = decompose(direct_sum_rep({s1, p1, s1}));
  CHECK(d.summands.size() == 2);
  CHECK(d.pieces.size() == 3);
}

TEST_CASE("a non-split endomorphism ring over Q is reported") {
  // Kronecker quiver with the regular module whose maps are (1, J) for J a rotation:
  // End contains Q(i), so no idempotent splitting exists over Q.
  auto k = truncate_ptr(finite_quiver({"1", "2"}, {{"1", "2"}, {"1", "2"}}), 0);
  Matrix id = Matrix::identity(Q, 2);
  Matrix rot = Matrix::from_ints(Q, 2, 2, {0, -1, 1, 0});
  Representation x(k, Q, {2, 2}, {id, rot});
  CHECK_THROWS_AS(decompose(x), FieldExtensionError);
  // over F_5, x^2 + 1 has roots and the module splits
  const Field F5 = Field::prime(5);
  Representation y(k, F5, {2, 2}, {Matrix::identity(F5, 2), Matrix::from_ints(F5, 2, 2, {0, -1, 1, 0})});
  CHECK(decompose(y).pieces.size() == 2);
}

TEST_CASE("family objects") {
  auto z = truncate_ptr(zigzag_a_biinf(), 4);
  auto a13 = realize_family_object(z, FamilyTag::ABiInf, FamilyLabel::parse("A_{1,3}"), Q);
  CHECK(a13.dimvec_string() == "1:1 2:1 3:1");
  auto am11 = realize_family_object(z, FamilyTag::ABiInf, FamilyLabel::parse("A_{-1,1}"), Q);
  CHECK(is_indecomposable(am11));

  auto d = truncate_ptr(zigzag_d_inf(), 6);
  auto a03 = realize_family_object(d, FamilyTag::DInf, FamilyLabel::parse("A^{(0)}_3"), Q);
  CHECK(a03.dimvec_string() == "1:1 2:1 3:1");
  auto b13 = realize_family_object(d, FamilyTag::DInf, FamilyLabel::parse("B_{1,3}"), Q);
  CHECK(b13.dimvec_string() == "0:1 1:1 2:1 3:1");
  for (auto text : {"B_{2,3}", "B_{3,4}", "B_{2,6}", "B_{4,7}", "B_{5,6}", "B_{7,3}"}) {
    auto b = realize_family_object(d, FamilyTag::DInf, FamilyLabel::parse(text), Q);
    CHECK_MESSAGE(is_indecomposable(b), text);
    CHECK(hom_dim(b, b) == 1);
  }
  CHECK(FamilyLabel::parse("B_{7,3}").to_string() == "B_{3,7}");
  CHECK(FamilyLabel::parse("A0_5") == FamilyLabel::parse("A^{(0)}_{5}"));
  CHECK_THROWS_AS(family_support(FamilyTag::DInf, FamilyLabel::parse("B_{1,1}")), PreconditionError);
  CHECK_THROWS_AS(family_support(FamilyTag::DInf, FamilyLabel::parse("B_{3,3}")), PreconditionError);
  CHECK_THROWS_AS(realize_family_object(d, FamilyTag::DInf, FamilyLabel::parse("A_{2,20}"), Q), TruncationError);
}

TEST_CASE("subquotients") {
  auto tri = truncate_ptr(finite_quiver({"1", "2", "3"}, {{"1", "2"}, {"2", "3"}, {"1", "3"}}), 0);
  auto p1 = projective_rep(tri, "1", Q);
  auto t = top(p1);
  CHECK(t.target.dims() == DimVector{1, 0, 0});
  CHECK(t.is_epi());
  auto s = socle(p1);
  CHECK(s.source.dims() == DimVector{0, 0, 2});
  auto k = kernel(t);
  CHECK(k.source.total_dim() == 3);
  auto c = cokernel(k);
  CHECK(find_isomorphism(c.target, t.target).has_value());
  auto im = image(t);
  CHECK(im.source.dims() == t.target.dims());
}

TEST_CASE("duality round trip") {
  std::mt19937_64 rng(3);
  auto q = make_quiver(oracle::random_acyclic_quiver(rng, 4, 5));
  auto op = opposite_window(q);
  auto x = oracle::random_rep(rng, q, Q, 3), y = oracle::random_rep(rng, q, Q, 3);
  CHECK(hom_dim(x, y) == hom_dim(dual(y, op), dual(x, op)));
  auto back = dual(dual(x, op), q);
  CHECK(back.maps() == x.maps());
}
