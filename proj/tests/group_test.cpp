#include <gtest/gtest.h>

#include <algorithm>
#include <array>
#include <numeric>
#include <set>

#include "corpus.hpp"
#include "torusq/error.hpp"
#include "torusq/group.hpp"

namespace torusq {
namespace {

using testing::group_case;

std::multiset<std::size_t> class_sizes(const FiniteGroup& g) {
  std::multiset<std::size_t> out;
  for (std::size_t c = 0; c < g.class_count(); ++c) out.insert(g.class_size(c));
  return out;
}

// Conjugacy class sizes of S_n computed directly on permutation arrays.
std::multiset<std::size_t> symmetric_group_class_sizes(int n) {
  std::vector<std::vector<int>> perms;
  std::vector<int> p(n);
  std::iota(p.begin(), p.end(), 0);
  do perms.push_back(p); while (std::next_permutation(p.begin(), p.end()));
  auto compose = [&](const std::vector<int>& a, const std::vector<int>& b) {
    std::vector<int> r(n);
    for (int i = 0; i < n; ++i) r[i] = a[b[i]];
    return r;
  };
  auto invert = [&](const std::vector<int>& a) {
    std::vector<int> r(n);
    for (int i = 0; i < n; ++i) r[a[i]] = i;
    return r;
  };
  std::set<std::vector<int>> seen;
  std::multiset<std::size_t> sizes;
  for (const auto& x : perms) {
    if (seen.count(x)) continue;
    std::set<std::vector<int>> cls;
    for (const auto& y : perms) cls.insert(compose(compose(invert(y), x), y));
    seen.insert(cls.begin(), cls.end());
    sizes.insert(cls.size());
  }
  return sizes;
}

TEST(Group, S4ClassesMatchDirectEnumeration) {
  const auto& g = *group_case("s4").group;
  EXPECT_EQ(g.order(), 24u);
  EXPECT_EQ(class_sizes(g), symmetric_group_class_sizes(4));
  EXPECT_EQ(class_sizes(g), (std::multiset<std::size_t>{1, 3, 6, 6, 8}));
}

TEST(Group, ElementOrderHistograms) {
  EXPECT_EQ(group_case("s4").group->element_orders(),
            (std::map<std::size_t, std::size_t>{{1, 1}, {2, 9}, {3, 8}, {4, 6}}));
  EXPECT_EQ(group_case("c4").group->element_orders(), (std::map<std::size_t, std::size_t>{{1, 1}, {2, 1}, {4, 2}}));
  EXPECT_EQ(group_case("q8").group->element_orders(), (std::map<std::size_t, std::size_t>{{1, 1}, {2, 1}, {4, 6}}));
  EXPECT_EQ(group_case("a5").group->element_orders(),
            (std::map<std::size_t, std::size_t>{{1, 1}, {2, 15}, {3, 20}, {5, 24}}));
}

TEST(Group, OrdersDivideGroupOrder) {
  for (const char* name : {"s4", "s4-standard", "q8", "c2", "c3", "c6", "a5", "torus2", "g1280", "d4", "s3"}) {
    const auto& g = *group_case(name).group;
    std::size_t total = 0;
    for (const auto& [order, count] : g.element_orders()) {
      EXPECT_EQ(g.order() % order, 0u) << name;
      total += count;
    }
    EXPECT_EQ(total, g.order()) << name;
  }
}

TEST(Group, CayleyAccessMatchesMatrixProducts) {
  for (const char* name : {"s4", "q8", "d4", "g1280"}) {
    const auto& g = *group_case(name).group;
    const std::size_t step = std::max<std::size_t>(1, g.order() / 40);
    for (std::size_t a = 0; a < g.order(); a += step) {
      EXPECT_TRUE((g.element(a) * g.element(g.inverse(a))).is_identity());
      for (std::size_t b = 0; b < g.order(); b += step) {
        EXPECT_EQ(g.element(g.mult(a, b)), g.element(a) * g.element(b)) << name;
      }
      for (std::size_t s = 0; s < g.generator_count(); ++s) {
        EXPECT_EQ(g.times_generator(a, s), g.mult(a, g.generator(s)));
      }
    }
    EXPECT_TRUE(g.element(0).is_identity());
  }
}

TEST(Group, ClassesPartitionAndAreClosedUnderConjugation) {
  for (const char* name : {"s4", "q8", "a5", "g1280"}) {
    const auto& g = *group_case(name).group;
    std::size_t total = 0;
    for (std::size_t c = 0; c < g.class_count(); ++c) {
      total += g.class_size(c);
      EXPECT_EQ(g.order() % g.class_size(c), 0u);
      const std::size_t x = g.class_representative(c);
      for (std::size_t s = 0; s < g.generator_count(); ++s) {
        EXPECT_EQ(g.class_of(g.conjugate(x, g.generator(s))), c);
      }
      for (std::size_t y : g.class_members(c)) EXPECT_EQ(g.element_order(y), g.element_order(x));
    }
    EXPECT_EQ(total, g.order());
    EXPECT_EQ(g.class_of(0), 0u);
  }
}

TEST(Group, PowerMaps) {
  const auto& g = *group_case("s4").group;
  const auto square = g.power_classes(2);
  const auto cube = g.power_classes(3);
  for (std::size_t c = 0; c < g.class_count(); ++c) {
    const std::size_t order = g.element_order(g.class_representative(c));
    const std::size_t sq = g.element_order(g.class_representative(square[c]));
    EXPECT_EQ(sq, order / std::gcd(order, std::size_t{2}));
    EXPECT_EQ(g.class_of(g.power(g.class_representative(c), 2)), square[c]);
    if (order == 3) EXPECT_EQ(cube[c], 0u);
    if (order == 4) EXPECT_EQ(g.element_order(g.class_representative(square[c])), 2u);
  }
  EXPECT_EQ(g.power(g.generator(0), -1), g.inverse(g.generator(0)));
}

TEST(Group, SylowCyclicity) {
  const auto& s4 = *group_case("s4").group;
  EXPECT_TRUE(s4.sylow_cyclic(3));
  EXPECT_FALSE(s4.sylow_cyclic(2));
  EXPECT_THROW(s4.sylow_cyclic(5), Error);
  EXPECT_THROW(s4.sylow_cyclic(4), Error);
  EXPECT_TRUE(group_case("c4").group->sylow_cyclic(2));
  EXPECT_FALSE(group_case("q8").group->sylow_cyclic(2));
  EXPECT_TRUE(group_case("a5").group->sylow_cyclic(5));
}

TEST(Group, Abelianization) {
  EXPECT_EQ(group_case("s4").group->abelianization_order(), 2u);
  EXPECT_EQ(group_case("s4").group->commutator_subgroup_order(), 12u);
  EXPECT_EQ(group_case("a5").group->abelianization_order(), 1u);
  EXPECT_EQ(group_case("q8").group->abelianization_order(), 4u);
  EXPECT_EQ(group_case("d4").group->abelianization_order(), 4u);
  EXPECT_EQ(group_case("c6").group->abelianization_order(), 6u);
  EXPECT_TRUE(group_case("c6").group->is_abelian());
  EXPECT_FALSE(group_case("s3").group->is_abelian());
}

TEST(Group, ClosureIsDeterministic) {
  const auto& file = group_case("g1280").file;
  const auto a = FiniteGroup::close(file.generators);
  const auto b = FiniteGroup::close(file.generators);
  ASSERT_EQ(a->order(), b->order());
  for (std::size_t i = 0; i < a->order(); ++i) ASSERT_EQ(a->element(i), b->element(i));
  for (std::size_t c = 0; c < a->class_count(); ++c) EXPECT_EQ(a->class_members(c), b->class_members(c));
}

TEST(Group, ClosureErrors) {
  const auto& file = group_case("a5").file;
  EXPECT_THROW(FiniteGroup::close(file.generators, 59), Error);
  EXPECT_NO_THROW(FiniteGroup::close(file.generators, 60));
  EXPECT_THROW(FiniteGroup::close(std::vector<GroupElement>{}), Error);
  const std::vector<GroupElement> mixed{GroupElement::identity(2), GroupElement::identity(3)};
  EXPECT_THROW(FiniteGroup::close(mixed), Error);
  Matrix singular(2, 2);
  singular(0, 0) = 1;
  EXPECT_THROW(FiniteGroup::close(std::vector{GroupElement::dense(singular)}), Error);
}

TEST(Group, ClosureLimitReportsKind) {
  try {
    FiniteGroup::close(group_case("a5").file.generators, 10);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::GroupTooLarge);
  }
}

TEST(Group, MonomialArithmetic) {
  // Row i of a monomial element is scalars[i] * z[perm[i]].
  const auto a = GroupElement::monomial({1, 0}, {Cyclotomic(2), Cyclotomic(3)});
  const auto b = GroupElement::monomial({1, 0}, {Cyclotomic::zeta(4), Cyclotomic(1)});
  EXPECT_EQ((a * b).to_dense(), a.to_dense() * b.to_dense());
  EXPECT_EQ(a.inverse().to_dense(), a.to_dense().inverse());
  EXPECT_EQ(a.transpose().to_dense(), a.to_dense().transpose());
  EXPECT_EQ(b.conj().to_dense(), b.to_dense().conj());
  EXPECT_EQ(a.trace(), Cyclotomic(0));
  EXPECT_EQ(GroupElement::dense(a.to_dense()), a);
}

TEST(Group, SubgroupClosure) {
  const auto& g = *group_case("s4").group;
  const std::vector<std::size_t> one{g.generator(1)};
  const auto member = g.subgroup_closure(one);
  EXPECT_EQ(std::count(member.begin(), member.end(), true), static_cast<long>(g.element_order(g.generator(1))));
}

}  // namespace
}  // namespace torusq
