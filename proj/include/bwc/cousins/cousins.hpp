#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "bwc/bw/barneswall.hpp"
#include "bwc/lattice/analysis.hpp"

namespace bwc::cousins {

using brw::MonomialIsometry;
using lat::Dyadic;
using lat::DyadicVector;
using lat::Lattice;

// L^eps(t) + P^eps(L)(f - 1)
Lattice mc(const Lattice& l, const MonomialIsometry& t, const MonomialIsometry& f, int eps);

struct CousinSpec {
  int d = 0, k = 0, eps = 1;
  brw::InvolutionSpec t;
  brw::FourvolutionSpec f;
  Lattice lattice;
  // coordinates of the eps-eigenspace of t
  gf2::BitWord region;
};

// MC_1(d,k,eps) over BW_d with the standard pair; needs d - 2k >= 1.
CousinSpec mc1(int d, int k, int eps);
// Same t, caller-chosen lower fourvolution commuting with t.
CousinSpec mc1_with(int d, int k, int eps, const brw::FourvolutionSpec& f);

// The expected rank 2^{d-1} + eps 2^{d-k-1}.
std::size_t cousin_rank(int d, int k, int eps);

enum class Status { pass, fail, bounded, skipped_budget };
std::string to_string(Status s);

struct Claim {
  std::string name;
  std::string source;
  std::string expected;
  std::string computed;
  Status status = Status::fail;
};

struct VerificationReport {
  int d = 0, k = 0, eps = 1;
  std::size_t rank = 0;
  std::string det;
  bool even = false;
  std::string min_norm;  // exact value, or a bound with its status
  int jno = 0;
  std::vector<lat::Int> disc_plus, disc_minus;
  std::string decomposition;
  std::vector<Claim> claims;

  bool ok() const;  // no claim failed
  bool complete() const;  // every claim passed
};

// Runs every applicable check; `budget` caps each enumeration.
VerificationReport verify_cousin(int d, int k, int eps, std::uint64_t budget = 10'000'000);

// Level-1 vectors (v_i +- v_{i+c})/2 of the cousin, c a core direction.
struct Level1Census {
  std::vector<DyadicVector> vectors;   // both signs, sorted
  std::size_t candidates = 0;          // membership tests made
  bool all_pairs = false;              // also tested pairs whose difference is off the core
  std::size_t off_core = 0;            // such pairs found in the lattice, kept out of vectors
  bool all_minimal_norm = true;        // every member has norm 2^{delta-1}
  bool no_half_units = true;           // no v_i/2 in the lattice
  std::vector<Lattice> components;     // spans of the nonorthogonality classes
  std::vector<lat::IsoStatus> component_is_scaled_d;  // vs sqrt(2^{delta-2}) D_{2^{d-2k}}
};
// d odd, d - 2k >= 3.
Level1Census level1_short_vectors(int d, int k, int eps, bool all_pairs = false);
Level1Census level1_short_vectors(const CousinSpec& c, bool all_pairs = false);

struct IndecomposabilityReport {
  int d = 0, k = 0, eps = 1;
  bool applicable = false;  // d odd, k >= 2, d - 2k >= 5
  std::string note;
  std::size_t components = 0;
  Dyadic pv_norm;       // norm of P^eps(v)
  Dyadic r;             // pv_norm / 2^delta
  Dyadic w_norm;        // norm of w = P^eps(v)(f - 1)
  int s = 0;            // floor(w_norm / 2^{delta-1}), bounds the number of summands
  bool w_in_lattice = false;
  std::size_t components_touched = 0;
  bool connected = false;
};
IndecomposabilityReport indecomposability_evidence(int d, int k, int eps);

struct TopFormReport {
  std::size_t samples = 0;
  std::map<int, std::size_t> by_level;
  std::vector<DyadicVector> counterexamples;
};
// Random lattice vectors x of level m; checks top(x) = 2^{-m} v_B with B in RM(d-2m+1,d).
TopFormReport top_form_check(const CousinSpec& c, std::size_t samples, std::uint64_t seed = 1);
// Draws vectors of exactly the given level.
TopFormReport top_form_check_level(const CousinSpec& c, int level, std::size_t samples, std::uint64_t seed = 1);

// Vectors (1/4) v_B eps_C in the cousin with B an affine 3-space in the
// support region, plus random probes of the other level-2 shapes of norm 2^{delta-1}.
struct Level2Census {
  std::size_t flats = 0;
  std::vector<DyadicVector> affine_vectors;  // one sign per +- pair
  std::size_t probes = 0;
  std::vector<DyadicVector> other_shapes;    // members not of the affine form
};
Level2Census level2_census(const CousinSpec& c, std::size_t probes = 200000, std::uint64_t seed = 1);

struct LeechResult {
  bool found = false;
  Lattice lattice;
  std::size_t attempts = 0;
  std::string method;
  std::size_t overlattices = 0, rootless = 0;  // even unimodular overlattices of L^+(t)
  std::string diagnostics;
  bool even = false, unimodular = false;
  std::optional<Dyadic> min_norm;
  std::optional<std::uint64_t> kissing;
};
// Overlattices of L^+(t) for BW_5, k = 1. First L^+(t) + P^+(L)X for
// X = (g-1)^2, g-1, (f-1)(g-1), g = gamma^{-1} f gamma, gamma a random
// reflection word on the E8 blocks; then every even unimodular overlattice,
// from the totally singular 4-spaces of the discriminant.
LeechResult leech_cousin(std::uint64_t seed = 1, int max_attempts = 200, bool count_kissing = true);

}  // namespace bwc::cousins
