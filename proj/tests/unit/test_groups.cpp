#include <doctest.h>

#include "cesr/error.hpp"
#include "cesr/groups.hpp"
#include "cesr/text_format.hpp"

using namespace cesr;

namespace {

// Conjugacy classes straight from the definition, sorted by smallest member.
std::vector<std::vector<Elem>> classes_by_definition(const FiniteGroup& g) {
  std::vector<std::vector<Elem>> out;
  std::vector<bool> seen(g.order());
  for (Elem x = 0; x < g.order(); ++x) {
    if (seen[x]) continue;
    std::vector<bool> in(g.order());
    for (Elem h = 0; h < g.order(); ++h)
      for (Elem k = 0; k < g.order(); ++k)
        if (g.mul(h, k) == g.identity()) in[g.mul(g.mul(h, x), k)] = true;
    std::vector<Elem> cls;
    for (Elem y = 0; y < g.order(); ++y)
      if (in[y]) {
        cls.push_back(y);
        seen[y] = true;
      }
    out.push_back(cls);
  }
  return out;
}

}  // namespace

TEST_CASE("quaternion group relations") {
  const auto q = quaternion_group();
  CHECK(validate_group(q).valid);
  const Elem a = q.index_of("a"), b = q.index_of("b"), e = q.identity();
  CHECK(q.power(a, 4) == e);
  CHECK(q.power(a, 2) != e);
  CHECK(q.power(b, 2) == q.power(a, 2));
  CHECK(q.mul(b, a) == q.mul(q.power(a, 3), b));
  CHECK(q.inverse(b) == q.index_of("a^2b"));
}

TEST_CASE("quaternion group classes, center and class") {
  const auto q = quaternion_group();
  const auto classes = conjugacy_classes(q);
  CHECK(classes.size() == 5);
  std::vector<std::vector<Elem>> members;
  for (const auto& c : classes) members.push_back(c.members);
  CHECK(members == classes_by_definition(q));
  CHECK(group_center(q) == std::vector<Elem>{q.identity(), q.index_of("a^2")});
  CHECK(commutator_subgroup(q) == group_center(q));
  CHECK(nilpotence_class(q).value == 2);
  CHECK(upper_central_series(q).size() == 3);
}

TEST_CASE("dihedral and symmetric groups") {
  const auto d16 = dihedral_group(16);
  CHECK(validate_group(d16).valid);
  CHECK(nilpotence_class(d16).value == 3);
  const auto s3 = builtin_group("s3");
  CHECK(s3.order() == 6);
  CHECK_FALSE(nilpotence_class(s3).nilpotent());
  CHECK(nilpotence_class(s3).to_string() == "not nilpotent");
  CHECK(nilpotence_class(builtin_group("d8")).value == 2);
  CHECK(nilpotence_class(cyclic_group(6)).value == 1);
  CHECK(nilpotence_class(cyclic_group(1)).value == 0);
  CHECK_THROWS_AS(builtin_group("x9"), Error);
}

TEST_CASE("property: class partitions agree with the definition") {
  for (const char* name : {"q8", "s3", "c5", "d8", "d10", "d16", "d12"}) {
    const auto g = builtin_group(name);
    CAPTURE(name);
    std::vector<std::vector<Elem>> members;
    std::size_t total = 0;
    for (const auto& c : conjugacy_classes(g)) {
      members.push_back(c.members);
      total += c.members.size();
      CHECK(g.order() % c.members.size() == 0);
    }
    CHECK(total == g.order());
    CHECK(members == classes_by_definition(g));
    for (Elem z : group_center(g))
      for (Elem x = 0; x < g.order(); ++x) CHECK(g.mul(z, x) == g.mul(x, z));
  }
}

TEST_CASE("quotients require normal subgroups") {
  const auto q = quaternion_group();
  const auto qz = quotient_group(q, group_center(q));
  CHECK(qz.group.order() == 4);
  CHECK(validate_group(qz.group).valid);
  const auto s3 = builtin_group("s3");
  const std::vector<Elem> reflection = generated_subgroup(s3, {s3.index_of("s")});
  CHECK_THROWS_AS(quotient_group(s3, reflection), PreconditionError);
}

TEST_CASE("groups from documents") {
  const auto doc = std::get<GroupDocument>(load_document(CESR_DATA_DIR "/c3.txt"));
  const auto g = group_from_document(doc);
  CHECK(g.order() == 3);
  CHECK(nilpotence_class(g).value == 1);
  const auto bad = std::get<GroupDocument>(parse_document("group\norder 2\nelements e a\ntable\ne a\na a\n"));
  CHECK_THROWS_AS(group_from_document(bad), PreconditionError);
}
