#include "cesr/registry.hpp"

#include <algorithm>
#include <array>

#include "cesr/constructions.hpp"
#include "cesr/error.hpp"
#include "cesr/group_semiring.hpp"
#include "cesr/matrix_element.hpp"

namespace cesr {

std::vector<ManifestResult> RegistryExample::evaluate() const {
  std::vector<ManifestResult> out;
  out.reserve(manifest.size());
  for (const auto& e : manifest) out.push_back(check(e));
  return out;
}

FiniteMagma example_base_magma() {
  // 0 absorbing, 1 identity, xy = x for x, y in {a, b}, c absorbs a and b.
  const std::vector<Elem> t = {
      0, 0, 0, 0, 0,  //
      0, 1, 2, 3, 4,  //
      0, 2, 2, 2, 4,  //
      0, 3, 3, 3, 4,  //
      0, 4, 4, 4, 4,  //
  };
  return FiniteMagma{{"0", "1", "a", "b", "c"}, OpTable(5, t)};
}

const std::vector<std::string>& example_ids() {
  static const std::vector<std::string> ids = {"1.1", "2.5", "2.6", "3.2", "fq8"};
  return ids;
}

namespace {

ManifestResult property_result(const FiniteSemiring& s, const ManifestEntry& e) {
  auto report = evaluate_property(s, e.key);
  std::string witness;
  for (Elem x : report.witness) witness += (witness.empty() ? "" : ", ") + s.label(x);
  return {e.key, e.expected, report.verdict, witness, std::move(report)};
}

std::string join_labels(const FiniteSemiring& s, const std::vector<Elem>& xs) {
  std::string out;
  for (Elem x : xs) out += (out.empty() ? "" : ", ") + s.label(x);
  return out;
}

RegistryExample subset_example() {
  RegistryExample ex;
  ex.id = "1.1";
  ex.description = "semiring of all subsets of a five-element semigroup";
  ex.semiring = subset_semiring(example_base_magma());
  ex.manifest = {{"commutative", false},     {"centrally_essential", true}, {"add_idempotent", true},
                 {"mult_idempotent", true},  {"zero_sums", false},          {"add_cancellative", false},
                 {"center_is_listed", true}, {"order_32", true}};
  const FiniteSemiring s = *ex.semiring;
  ex.check = [s](const ManifestEntry& e) -> ManifestResult {
    if (e.key == "order_32") return {e.key, e.expected, s.order() == 32, std::to_string(s.order()), std::nullopt};
    if (e.key == "center_is_listed") {
      // Subsets of {0, 1, c}.
      std::vector<Elem> listed = {0, 1, 2, 3, 16, 17, 18, 19};
      const auto c = center(s);
      return {e.key, e.expected, c == listed, join_labels(s, c), std::nullopt};
    }
    return property_result(s, e);
  };
  return ex;
}

RegistryExample fq8_example() {
  RegistryExample ex;
  ex.id = "fq8";
  ex.description = "group ring of the quaternion group over F2";
  ex.semiring = finite_group_ring(quaternion_group(), CoeffDomain::prime_field(2));
  ex.manifest = {{"centrally_essential", true}, {"commutative", false}, {"nilpotents", true}};
  const FiniteSemiring s = *ex.semiring;
  ex.check = [s](const ManifestEntry& e) { return property_result(s, e); };
  return ex;
}

MatrixElement nat_matrix(std::size_t n, const std::vector<long>& v) {
  return MatrixElement::from_ints(CoeffDomain::naturals(), n, MatrixShape::upper_triangular, v);
}

// alpha*I + a E12 + b E13 + c E23.
MatrixElement shape_3x3(long alpha, long a, long b, long c) {
  return nat_matrix(3, {alpha, a, b, 0, alpha, c, 0, 0, alpha});
}

// Instances of the four generator shapes with parameters in {1, 2}.
std::vector<MatrixElement> generators_3x3() {
  std::vector<MatrixElement> gens;
  for (long alpha : {1, 2})
    for (long a : {1, 2})
      for (long b : {1, 2})
        for (long c : {1, 2}) gens.push_back(shape_3x3(alpha, a, b, c));
  for (long b : {1, 2}) gens.push_back(shape_3x3(0, 0, b, 0));
  gens.push_back(shape_3x3(0, 0, 0, 0));
  for (long alpha : {1, 2}) gens.push_back(shape_3x3(alpha, 0, 0, 0));
  return gens;
}

RegistryExample matrix3_example() {
  RegistryExample ex;
  ex.id = "2.5";
  ex.description = "semiring generated by four upper triangular 3x3 shapes over the naturals";
  ex.manifest = {{"ab_ne_ba", true},
                 {"ad_nonzero_central", true},
                 {"center_form_central", true},
                 {"unequal_superdiagonal_not_central", true}};
  ex.check = [](const ManifestEntry& e) -> ManifestResult {
    const auto gens = generators_3x3();
    // a12 = b23 = 1, b12 = a23 = 2, remaining entries equal.
    const auto A = shape_3x3(1, 1, 1, 2);
    const auto B = shape_3x3(1, 2, 1, 1);
    if (e.key == "ab_ne_ba") {
      const bool ne = !(A * B == B * A);
      return {e.key, e.expected, ne, "AB = " + (A * B).to_string() + ", BA = " + (B * A).to_string(), std::nullopt};
    }
    if (e.key == "ad_nonzero_central") {
      const auto D = shape_3x3(0, 0, 1, 0);
      const auto AD = A * D;
      const bool ok = !AD.is_zero() && is_central_wrt_generators(AD, gens);
      return {e.key, e.expected, ok, "AD = " + AD.to_string(), std::nullopt};
    }
    if (e.key == "center_form_central") {
      bool ok = true;
      for (long alpha : {0, 1, 3})
        for (long b : {0, 1, 3}) ok = ok && is_central_wrt_generators(shape_3x3(alpha, 0, b, 0), gens);
      return {e.key, e.expected, ok, "alpha I + b E13 for alpha, b in {0, 1, 3}", std::nullopt};
    }
    if (e.key == "unequal_superdiagonal_not_central") {
      for (const auto& g : gens)
        if (!(A * g == g * A))
          return {e.key, e.expected, true, "A fails to commute with " + g.to_string(), std::nullopt};
      return {e.key, e.expected, false, "", std::nullopt};
    }
    throw Error("unknown check '" + e.key + "'");
  };
  return ex;
}

// Matrices of the seven-parameter 7x7 form.
MatrixElement shape_7x7(long alpha, long a, long b, long c, long d, long e, long f) {
  std::vector<long> m(49, 0);
  auto at = [&](int i, int j) -> long& { return m[static_cast<std::size_t>(i * 7 + j)]; };
  for (int i = 0; i < 7; ++i) at(i, i) = alpha;
  at(0, 1) = a, at(0, 2) = b, at(0, 3) = c, at(0, 4) = d, at(0, 5) = e, at(0, 6) = f;
  at(1, 3) = b, at(1, 6) = d;
  at(2, 6) = e;
  at(4, 6) = a;
  at(5, 6) = b;
  return nat_matrix(7, m);
}

std::vector<MatrixElement> generators_7x7() {
  std::vector<MatrixElement> gens;
  // Positive parameters, one varied at a time from the all-ones matrix.
  gens.push_back(shape_7x7(1, 1, 1, 1, 1, 1, 1));
  for (int k = 0; k < 7; ++k) {
    std::array<long, 7> p{1, 1, 1, 1, 1, 1, 1};
    p[static_cast<std::size_t>(k)] = 2;
    gens.push_back(shape_7x7(p[0], p[1], p[2], p[3], p[4], p[5], p[6]));
  }
  for (long alpha : {0, 1, 2}) gens.push_back(shape_7x7(alpha, 0, 0, 0, 0, 0, 0));
  return gens;
}

RegistryExample matrix7_example() {
  RegistryExample ex;
  ex.id = "2.6";
  ex.description = "semiring generated by a seven-parameter 7x7 integer matrix form and scalars";
  ex.manifest = {{"scalars_central", true}, {"scalar_multiples_not_central", true}, {"non_commutative", true}};
  ex.check = [](const ManifestEntry& e) -> ManifestResult {
    const auto gens = generators_7x7();
    if (e.key == "scalars_central") {
      bool ok = true;
      for (long alpha : {0, 1, 2, 5}) ok = ok && is_central_wrt_generators(shape_7x7(alpha, 0, 0, 0, 0, 0, 0), gens);
      return {e.key, e.expected, ok, "alpha I for alpha in {0, 1, 2, 5}", std::nullopt};
    }
    if (e.key == "scalar_multiples_not_central") {
      // x has positive entries; x * alpha I is central only for alpha = 0.
      const auto x = gens.front();
      std::string witness;
      bool ok = true;
      for (long alpha : {1, 2, 3}) {
        const auto y = x * shape_7x7(alpha, 0, 0, 0, 0, 0, 0);
        const auto it = std::find_if(gens.begin(), gens.end(), [&](const MatrixElement& g) { return !(y * g == g * y); });
        if (it == gens.end()) ok = false;
        else if (witness.empty()) witness = "x fails to commute with " + it->to_string();
      }
      return {e.key, e.expected, ok, witness, std::nullopt};
    }
    if (e.key == "non_commutative") {
      for (const auto& g : gens)
        for (const auto& h : gens)
          if (!(g * h == h * g)) return {e.key, e.expected, true, g.to_string() + " * " + h.to_string(), std::nullopt};
      return {e.key, e.expected, false, "", std::nullopt};
    }
    throw Error("unknown check '" + e.key + "'");
  };
  return ex;
}

RegistryExample quaternion_semiring_example(std::uint64_t seed, std::size_t trials) {
  RegistryExample ex;
  ex.id = "3.2";
  ex.description = "group semiring of the quaternion group over nonnegative rationals";
  ex.manifest = {{"commutative", false},        {"add_cancellative", true}, {"reduced", true},
                 {"centrally_essential", true}, {"zero_divisors", false},   {"semisubtractive", false}};
  ex.check = [seed, trials](const ManifestEntry& e) -> ManifestResult {
    auto q8 = std::make_shared<const FiniteGroup>(quaternion_group());
    const auto qplus = CoeffDomain::nonneg_rationals();
    const auto a = GSElement::basis(q8, qplus, q8->index_of("a"));
    const auto b = GSElement::basis(q8, qplus, q8->index_of("b"));
    if (e.key == "commutative") {
      const bool comm = a * b == b * a;
      return {e.key, e.expected, comm, "ab = " + (a * b).to_string() + ", ba = " + (b * a).to_string(), std::nullopt};
    }
    if (e.key == "add_cancellative")
      return {e.key, e.expected, descriptor_of(qplus).additively_cancellative, "coefficientwise", std::nullopt};
    if (e.key == "centrally_essential") {
      const auto cert = certify_group_semiring(q8, qplus);
      return {e.key, e.expected, cert.status == CertificateStatus::certified, cert.verdict, std::nullopt};
    }
    if (e.key == "semisubtractive") {
      const bool ab = gs_subtractive_compare(a, b).has_value() || gs_subtractive_compare(b, a).has_value();
      return {e.key, e.expected, ab, "no z with a + z = b or b + z = a", std::nullopt};
    }
    const auto suite = quaternion_witness_suite(seed, trials);
    if (e.key == "reduced")
      return {e.key, e.expected, suite.reduced_probe_clean && suite.reduced_pairs_clean,
              suite.reduced_summary + " (seed " + std::to_string(suite.seed) + ")", std::nullopt};
    if (e.key == "zero_divisors")
      return {e.key, e.expected, !suite.zero_divisor_probe_clean,
              "probe of " + std::to_string(suite.trials) + " sampled products", std::nullopt};
    throw Error("unknown check '" + e.key + "'");
  };
  return ex;
}

}  // namespace

RegistryExample named_example(const std::string& id, std::uint64_t seed, std::size_t trials) {
  if (id == "1.1") return subset_example();
  if (id == "2.5") return matrix3_example();
  if (id == "2.6") return matrix7_example();
  if (id == "3.2") return quaternion_semiring_example(seed, trials);
  if (id == "fq8") return fq8_example();
  throw Error("unknown example '" + id + "'");
}

}  // namespace cesr
