#pragma once

// Verification suites: every identity the library is built on, run against
// independent oracles on seeded random instances. The CLI `verify`
// subcommand and the acceptance suite are thin wrappers around these.
//
// Randomness is a std::mt19937_64 seeded from the caller so failures are
// reproducible.

#include <optional>
#include <random>
#include <string>
#include <vector>

#include "cwl/chord_diagram.hpp"
#include "cwl/int_matrix.hpp"
#include "cwl/link.hpp"
#include "cwl/link_data.hpp"

namespace cwl {

struct CheckResult {
    std::string name;
    bool pass = false;
    std::string detail;  // what failed, when it failed
};

struct SuiteReport {
    std::string suite;
    std::vector<CheckResult> checks;
    bool passed() const;
};

struct VerifyOptions {
    uint64_t seed = 1;
    int max_size = 5;  // caps enumeration/verification sizes
};

const std::vector<std::string>& suite_names();  // skein, det-identity, mu-paths, ...
SuiteReport run_suite(const std::string& name, const VerifyOptions& opt);
std::vector<SuiteReport> run_all(const VerifyOptions& opt);

// ---------------------------------------------------------------------------
// Random instances
// ---------------------------------------------------------------------------

IntMatrix random_symmetric_matrix(std::mt19937_64& rng, int n, int lo, int hi);

// Synthetic invariant data: random symmetric linking matrix and random
// Conway tables respecting the parity/offset pattern.
LinkInvariantData random_link_data(std::mt19937_64& rng, int n, int entry_bound);

// Closure of a random braid word (PD-code route). Every strand is made to
// participate in a crossing. Framings are independent uniform draws.
FramedLink random_braid_link(std::mt19937_64& rng, int strands, int word_length,
                             int framing_bound);

// Same, resampled until the closure has exactly `components` components.
FramedLink random_link_with_components(std::mt19937_64& rng, int components, int strands,
                                       int word_length, int framing_bound);

// A split union of two independent braids (guaranteed split sublink pair).
FramedLink random_split_link(std::mt19937_64& rng, int word_length, int framing_bound);

// ---------------------------------------------------------------------------
// Oracles
// ---------------------------------------------------------------------------

// All essential diagrams on n circles found by brute force: every perfect
// matching with the admissible leg profile, kept when connected with
// iota_theta of the requested sign.
DiagramSet brute_force_essential(int n, Sign sign);

// Construction-tuple evaluation of the D±-family coefficient sums: anchor
// circle(s) plus ordered ear sequences, weighted by products of linking
// entries read along each ear. Independent of chain_product / the partition
// iterators.
Rational family_path_sum_two(const IntMatrix& linking, int a, int b);
Rational family_path_sum_three(const IntMatrix& linking, int a, int b, int c);

// Instantiates every construction tuple as an actual labeled diagram and
// compares the key set with build_family's output.
bool family_keys_match_two(Sign sign, int circles, int a, int b);
bool family_keys_match_three(Sign sign, int circles, int a, int b, int c);

// Naive cofactor-expansion determinant (test oracle for Bareiss).
Integer cofactor_determinant(const IntMatrix& m);

// Sturm-chain root counts of the characteristic polynomial in (0, inf) and
// (-inf, 0) (test oracle for inertia).
std::pair<int, int> sturm_signature(const IntMatrix& m);

}  // namespace cwl
