#ifndef VDUAL_DUALITY_HPP
#define VDUAL_DUALITY_HPP

#include <cstdint>
#include <optional>
#include <string>

#include "vdual/loci.hpp"

namespace vdual {

// A pure-dimensional reduced weighted-homogeneous variety germ with its
// locus data; the working context for every duality question.
struct VarietyContext {
    Ideal J_Z;
    int p_Z = 0;    // codim of Z in the ambient space
    int dim_Z = 0;  // n - p_Z
    FreeComplex resolution;  // minimal free resolution of O/J_Z
    LocusReport loci;
};

VarietyContext build_variety_context(const Ideal& J_Z);

// Tuple of functions on Z, none vanishing identically on Z.
struct TupleOnZ {
    std::vector<Polynomial> f;
    int length() const { return static_cast<int>(f.size()); }
};

TupleOnZ make_tuple_on_Z(const VarietyContext& Z, std::vector<Polynomial> f);

enum class VerdictStatus { CertifiedHolds, FailsWithWitness, FailsAtNearbyPoint, Indeterminate };
std::string to_string(VerdictStatus s);

struct ConditionRow {
    int k = 0;
    bool empty_locus = false;
    int codim = 0;  // codim in Z of the tested locus; meaningless when empty
    int bound = 0;
    bool ok = false;
};

// One replayable membership claim: lhs ∈ (ideal_gens) or lhs ∉ (ideal_gens).
struct CertificateLine {
    bool expect_member = true;
    Polynomial lhs;
    std::vector<Polynomial> ideal_gens;
    std::string note;
};

// Re-verify a claim from scratch (fresh basis).
bool replay_certificate_line(const CertificateLine& line);

struct CounterexampleWitness {
    std::vector<Polynomial> tuple;
    Polynomial g;
    std::vector<CertificateLine> lines;
    bool existence_only = false;  // the branch is proven but no explicit pair was built
    int equality_k = -1;
    std::string branch;  // "cohen-macaulay" or "non-cohen-macaulay"
    int power_index = 0;
    std::string note;
};

struct DualityVerdict {
    VerdictStatus status = VerdictStatus::Indeterminate;
    std::vector<ConditionRow> table;
    std::optional<CounterexampleWitness> witness;
    std::string note;
};

// codim_Z(Z_f) = p, tested in the ambient ring.
bool is_complete_intersection_on(const VarietyContext& Z, const TupleOnZ& f);

// Sufficient condition codim_Z(Z^k ∩ Z_f) >= k + p + 1 for all k; failure of
// the bound alone yields Indeterminate, never a refutation.
DualityVerdict duality_certificate(const VarietyContext& Z, const TupleOnZ& f);

// Classification of the germ: holds for every length-p complete intersection,
// fails at a nearby point (with branch data), or indeterminate.
DualityVerdict p_duality_classification(const VarietyContext& Z, int p);

struct RegularSequenceResult {
    bool regular = true;
    int failing_index = -1;  // 1-based index of the zero divisor
    std::optional<Polynomial> witness;
    std::vector<CertificateLine> lines;
};

RegularSequenceResult is_regular_sequence_on(const VarietyContext& Z, const TupleOnZ& f);

struct DepthConditionResult {
    bool holds = true;
    std::vector<ConditionRow> table;
};

// depth_{Z^1} O_Z >= q  iff  codim_Z Z^k >= q + k for all k >= 1.
DepthConditionResult depth_condition_Z1(const VarietyContext& Z, int q);

// codim_Z(Z_f ∩ Z^l) >= p + l for l >= 1 (tensor-product resolution bound).
struct TensorConditionResult {
    bool holds = true;
    std::vector<ConditionRow> table;
};
TensorConditionResult tensor_condition(const VarietyContext& Z, const TupleOnZ& f);

struct SocleData {
    Ideal q;
    int socle_dim = 0;
    std::vector<Monomial> staircase;  // standard monomial basis of O/q
};

// dim (q : m)/q for an Artinian q (every variable in √q), via the staircase
// basis and exact linear algebra.
SocleData socle_dimension(const Ideal& q);

// Seeded generic tuple through V(V) on Z: target_codim integer combinations of
// the generators of V, each step verified by an exact codimension computation
// and retried up to 32 times.
TupleOnZ generic_ci_through(const Ideal& V, const VarietyContext& Z, int target_codim,
                            uint64_t seed);

struct Counterexample {
    TupleOnZ f;
    Polynomial g;
    std::vector<CertificateLine> lines;
    int power_index = 0;    // minimal m with J_V^m ⊆ (f) + J_Z (Cohen-Macaulay branch)
    int failing_index = -1; // regularity failure position (non-Cohen-Macaulay branch)
    std::string note;
};

// Cohen-Macaulay branch: f through Z_sing extended to codim q, g from the
// staircase of J_V^(m-1) mod (f)+J_Z, certificate g ∉ I and g·J_V ⊆ I.
Counterexample construct_counterexample_CM(const VarietyContext& Z, int q, uint64_t seed);

// Non-Cohen-Macaulay branch: (p+1)-tuple through Z^1 cannot be a regular
// sequence; the zero-divisor witness at the failing index certifies strict
// inclusion for the prefix tuple.
Counterexample construct_counterexample_nonCM(const VarietyContext& Z, int p, uint64_t seed);

} // namespace vdual

#endif
