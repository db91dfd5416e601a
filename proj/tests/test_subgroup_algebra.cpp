#include <doctest.h>

#include "helpers.hpp"
#include "sigma/config.hpp"
#include "sigma/errors.hpp"
#include "sigma/partition.hpp"

using namespace testing;

namespace {

Subgroup sub(PermGroup const& g, std::vector<std::vector<std::vector<Point>>> const& gens) {
  std::vector<Permutation> ps;
  for (auto const& c : gens) ps.push_back(P(g.degree(), c));
  return Subgroup::generated(g, ps);
}

PrimeFilter primes(std::set<std::uint64_t> s) {
  return [s](std::uint64_t p) { return s.count(p) > 0; };
}

}  // namespace

TEST_SUITE("subgroup_algebra") {
  TEST_CASE("subgroup construction checks containment") {
    auto a = a5();
    CHECK_THROWS_AS(Subgroup::generated(a, {P(5, {{1, 2}})}), InvalidArgument);
    auto h = sub(a, {{{1, 2, 3}}});
    CHECK(h.order() == 3);
    CHECK(a.order() % h.order() == 0);
    CHECK(Subgroup::whole(a).order() == 60);
    CHECK(Subgroup::trivial(a).is_trivial());
  }

  TEST_CASE("permutes examples") {
    auto g = s4();
    auto p2 = sylow_subgroup(g, 2);
    auto p3 = sylow_subgroup(g, 3);
    CHECK(p2.order() == 8);
    CHECK(p3.order() == 3);
    CHECK(permutes(p2, p3));
    CHECK(permutes(p2, p2));
    auto s3 = build_group(GroupSpec::symmetric(3));
    CHECK_FALSE(permutes(sub(s3, {{{1, 2}}}), sub(s3, {{{1, 3}}})));
    CHECK_THROWS_AS(permutes(p2, Subgroup::whole(s3)), AmbientMismatch);
  }

  TEST_CASE("intersection examples") {
    auto g = s4();
    auto p2 = sylow_subgroup(g, 2);
    CHECK(intersection(p2, p2) == p2);
    CHECK(intersection(p2, sylow_subgroup(g, 3)).is_trivial());
    auto other = conjugate(p2, P(4, {{1, 2, 3}}));
    REQUIRE_FALSE(other == p2);
    auto both = intersection(p2, other);
    CHECK(both.order() == 4);
    CHECK(elements_of(both) == oracle::intersect(elements_of(p2), elements_of(other)));
  }

  TEST_CASE("normal closure examples") {
    auto g = s4();
    auto klein = sub(g, {{{1, 2}, {3, 4}}, {{1, 3}, {2, 4}}});
    CHECK(normal_closure(g, klein) == klein);
    CHECK(normal_closure(g, sub(g, {{{1, 2}}})).order() == 24);
    CHECK(normal_closure(g, sub(g, {{{1, 2}, {3, 4}}})) == klein);
  }

  TEST_CASE("subgroup operations agree with set oracles on S4 and A4 x C2") {
    for (auto const& spec : {GroupSpec::symmetric(4),
                             GroupSpec::direct_product({GroupSpec::alternating(4), GroupSpec::cyclic(2)})}) {
      auto g = build_group(spec);
      auto ge = elements_of(g);
      auto subs = oracle::all_subgroups(ge);
      for (auto const& hs : subs) {
        auto h = from_set(g, hs);
        CHECK(elements_of(h) == hs);
        CHECK(elements_of(normal_closure(g, h)) == oracle::normal_closure(ge, hs));
        CHECK(elements_of(normalizer(g, h)) == oracle::normalizer(ge, hs));
        CHECK(elements_of(centralizer(g, h)) == oracle::centralizer(ge, hs));
        CHECK(is_normal(g, h) == oracle::is_normal(ge, hs));
        // Minimality: every normal subgroup containing H contains the closure.
        auto closure = elements_of(normal_closure(g, h));
        for (auto const& ns : subs) {
          if (oracle::is_normal(ge, ns) && std::includes(ns.begin(), ns.end(), hs.begin(), hs.end())) {
            CHECK(std::includes(ns.begin(), ns.end(), closure.begin(), closure.end()));
          }
        }
      }
    }
  }

  TEST_CASE("permutes and intersection agree with set products on all pairs") {
    for (auto const& spec : {GroupSpec::symmetric(4), GroupSpec::dihedral(6)}) {
      auto g = build_group(spec);
      auto subs = oracle::all_subgroups(elements_of(g));
      std::vector<Subgroup> hs;
      for (auto const& s : subs) hs.push_back(from_set(g, s));
      for (std::size_t i = 0; i < subs.size(); ++i) {
        for (std::size_t j = 0; j < subs.size(); ++j) {
          bool brute = oracle::product(subs[i], subs[j]) == oracle::product(subs[j], subs[i]);
          CHECK(permutes(hs[i], hs[j]) == brute);
          CHECK(elements_of(intersection(hs[i], hs[j])) == oracle::intersect(subs[i], subs[j]));
        }
      }
    }
  }

  TEST_CASE("chain backtracking agrees with the element filter") {
    auto g = build_group(GroupSpec::direct_product({GroupSpec::symmetric(4), GroupSpec::dihedral(5)}));
    std::vector<Subgroup> probes{sylow_subgroup(g, 2), sylow_subgroup(g, 3), sylow_subgroup(g, 5),
                                 sub(g, {{{1, 2}}, {{5, 6, 7, 8, 9}}})};
    std::vector<Subgroup> filtered, centr, norm;
    for (std::size_t i = 0; i < probes.size(); ++i) {
      for (std::size_t j = 0; j < probes.size(); ++j) filtered.push_back(intersection(probes[i], probes[j]));
      centr.push_back(centralizer(g, probes[i]));
      norm.push_back(normalizer(g, probes[i]));
    }
    ScopedLimits lim({.iteration_cap = 5});
    std::size_t k = 0;
    for (std::size_t i = 0; i < probes.size(); ++i) {
      for (std::size_t j = 0; j < probes.size(); ++j) CHECK(intersection(probes[i], probes[j]) == filtered[k++]);
      CHECK(centralizer(g, probes[i]) == centr[i]);
      CHECK(normalizer(g, probes[i]) == norm[i]);
    }
  }

  TEST_CASE("commutator subgroup") {
    auto g = s4();
    auto whole = Subgroup::whole(g);
    CHECK(commutator_subgroup(whole, whole).order() == 12);
    auto a = a5();
    CHECK(commutator_subgroup(Subgroup::whole(a), Subgroup::whole(a)).order() == 60);
    auto c = build_group(GroupSpec::cyclic(6));
    CHECK(commutator_subgroup(Subgroup::whole(c), Subgroup::whole(c)).is_trivial());
  }

  TEST_CASE("pi-core and pi-residual agree with oracles") {
    std::vector<GroupSpec> specs{GroupSpec::symmetric(4), GroupSpec::dihedral(6), GroupSpec::alternating(5),
                                 GroupSpec::direct_product({GroupSpec::symmetric(3), GroupSpec::cyclic(5)}),
                                 GroupSpec::cyclic_extension(7, 3)};
    std::vector<std::set<std::uint64_t>> pis{{2}, {3}, {2, 3}, {5}, {7}, {3, 5}};
    for (auto const& spec : specs) {
      auto g = build_group(spec);
      auto ge = elements_of(g);
      auto normals = oracle::normal_subgroups(ge);
      for (auto const& pi : pis) {
        auto f = primes(pi);
        CAPTURE(group_name(spec));
        auto core = pi_core(g, f);
        CHECK(elements_of(core) == oracle::pi_core(ge, f));
        CHECK(is_normal(g, core));
        CHECK(is_pi_number(core.order(), f));
        // The residual is the least normal subgroup with a pi-quotient.
        oracle::Set least = ge;
        for (auto const& n : normals) {
          if (oracle::is_pi_number(ge.size() / n.size(), f) && n.size() < least.size()) least = n;
        }
        auto res = pi_residual(g, f);
        CHECK(elements_of(res) == least);
      }
    }
  }

  TEST_CASE("solubility and Sylow subgroups") {
    CHECK(is_soluble(s4()));
    CHECK_FALSE(is_soluble(a5()));
    CHECK(is_soluble(PermGroup::trivial(3)));
    auto g = build_group(GroupSpec::symmetric(6));
    CHECK(sylow_subgroup(g, 2).order() == 16);
    CHECK(sylow_subgroup(g, 3).order() == 9);
    CHECK(sylow_subgroup(g, 5).order() == 5);
    CHECK(sylow_subgroup(g, 7).is_trivial());
  }

  TEST_CASE("conjugates and conjugacy classes") {
    auto g = s4();
    CHECK(conjugates(g, sylow_subgroup(g, 2)).size() == 3);
    CHECK(conjugates(g, sylow_subgroup(g, 3)).size() == 4);
    CHECK(conjugacy_class_representatives(g).size() == 5);
    CHECK(conjugacy_class_representatives(a5()).size() == 5);
  }
}
