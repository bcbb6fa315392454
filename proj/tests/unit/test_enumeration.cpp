#include <gtest/gtest.h>

#include "gasket/enumeration.hpp"
#include "gasket/errors.hpp"
#include "gasket/exact.hpp"

using namespace gasket;

TEST(Census, ClassSizes) {
  const Census& c = sg_census();
  EXPECT_EQ(c.subsets_examined, 512u);
  const std::size_t want[7] = {18, 18, 18, 30, 30, 30, 50};
  for (int x = 0; x < 7; ++x) EXPECT_EQ(c.class_size(static_cast<ForestClass>(x)), want[x]) << x;
}

TEST(Census, PartsAreLevelZeroForests) {
  for (const auto& e : sg_census().entries) {
    ASSERT_EQ(e.parts.size(), 3u);
    for (ForestClass p : e.parts) EXPECT_LT(static_cast<int>(p), 7);
  }
}

TEST(Census, UniformityHoldsForTheGasket) {
  UniformityReport r = check_uniformity(sg_census());
  EXPECT_TRUE(r.pass) << r.detail;
}

TEST(Census, AsymmetricCellFailsUniformity) {
  Census c = enumerate_cell_forests(load_cell("asymmetric"));
  UniformityReport r = check_uniformity(c);
  EXPECT_FALSE(r.pass);
  EXPECT_FALSE(r.detail.empty());
}

TEST(Offspring, TablesAreNormalized) {
  const SgTables& t = sg_tables();
  EXPECT_NO_THROW(t.forest.check_normalized());
  EXPECT_NO_THROW(t.path.check_normalized());
  EXPECT_NO_THROW(t.component.check_normalized());
  EXPECT_NO_THROW(t.interface.check_normalized());
  EXPECT_EQ(t.forest.type_count(), 7);
  EXPECT_EQ(t.path.type_count(), 12);
  EXPECT_EQ(t.component.type_count(), 19);
  EXPECT_EQ(t.interface.type_count(), 7);
}

TEST(Offspring, ForestRowsAreUniformOverClassMembers) {
  const OffspringTable& t = sg_tables().forest;
  for (int x = 0; x < 7; ++x) {
    const auto& row = t.rows[static_cast<std::size_t>(x)];
    EXPECT_EQ(row.size(), sg_census().class_size(static_cast<ForestClass>(x)));
    for (const auto& o : row) EXPECT_EQ(o.prob, rat(1, static_cast<long>(row.size())));
  }
}

TEST(Offspring, GroupChoiceCanBePostponed) {
  EXPECT_TRUE(postponable(sg_tables().forest, forest_collapse_map()));
  EXPECT_TRUE(postponable(sg_tables().path, path_collapse_map()));
}

TEST(Offspring, CollapsedGeneratingFunctionsAgreeWithinGroups) {
  EXPECT_NO_THROW(collapsed_pgfs(sg_tables().forest, forest_symmetry_map(), 3));
  EXPECT_NO_THROW(collapsed_pgfs(sg_tables().path, path_class_map(), 3));
  EXPECT_NO_THROW(collapsed_pgfs(sg_tables().path_collapsed, {0, 0, 0, 1, 1, 1}, 2));
  // Tree subclasses differ once S children are told apart.
  EXPECT_THROW(collapsed_pgfs(sg_tables().forest, forest_collapse_map(), 5), ConsistencyError);
}

TEST(Offspring, PathChildrenMeetAtCorners) {
  // Consecutive children of every outcome share the corner where one exits
  // and the next enters.
  const OffspringTable& t = sg_tables().path;
  const Census& c = sg_census();
  GraphRef g1 = c.g1;
  for (std::size_t x = 0; x < t.rows.size(); ++x)
    for (const auto& o : t.rows[x])
      for (std::size_t i = 0; i + 1 < o.children.size(); ++i) {
        const Child& a = o.children[i];
        const Child& b = o.children[i + 1];
        EXPECT_EQ(g1->corner(a.suffix, a.exit), g1->corner(b.suffix, b.entry));
      }
}

TEST(Offspring, TypeCountConstraintsAtLevelOne) {
  for (const auto& e : sg_census().entries) {
    std::vector<Integer> chi(7, Integer(0));
    for (ForestClass p : e.parts) chi[static_cast<std::size_t>(p)] += 1;
    EXPECT_TRUE(constraint_identities(chi, 1, component_count(e.cls)));
  }
}

TEST(Offspring, PeakProbabilityIsOneThird) {
  // A through part passes its marked corner; the child at that corner is
  // itself through with probability 1/3. Non-through parts never do this.
  const auto& table = sg_tables().path;
  for (int p = 0; p < kConnTypes; ++p) {
    const int marked = conn_types()[static_cast<std::size_t>(p)].marked;
    Rational prob(0);
    for (const auto& o : table.rows[static_cast<std::size_t>(p)])
      for (const auto& ch : o.children)
        if (ch.suffix == marked && conn_is_through(ch.type)) prob += o.prob;
    EXPECT_EQ(prob, conn_is_through(p) ? rat(1, 3) : Rational(0)) << conn_name(p);
  }
}
