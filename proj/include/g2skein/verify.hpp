#pragma once

// Identity checks and the transparent-subspace search. Every check is
// deterministic in its parameters and returns a VerifyReport.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "g2skein/annulus11.hpp"
#include "g2skein/xyring.hpp"

namespace g2skein {

enum class Status { Pass, Fail, Error };
std::string to_string(Status s);

struct VerifyReport {
    std::string check;
    nlohmann::ordered_json params = nlohmann::ordered_json::object();
    Status status = Status::Pass;
    std::optional<std::string> witness;  // always set when status is Fail or Error
    std::int64_t elapsed_ms = 0;

    nlohmann::ordered_json to_json() const;
    /// One line: "PASS  name  {params}  (12 ms)" plus the witness if any.
    std::string summary() const;
};

VerifyReport check_elementary_sums();
/// Same identity against caller-supplied tables (8 and 15 entries).
VerifyReport check_elementary_sums(const std::vector<XYPoly>& e, const std::vector<XYPoly>& f);
/// P_k(x^(i), y^(i)) = x^(ik), same for Q: k <= kmax at i = 1, and
/// 2 <= i <= imax with k <= kmax_phi.
VerifyReport check_power_sums(long kmax = 20, long imax = 3, long kmax_phi = 6);
/// P_k(P_i, Q_i) = P_ik and the Q analogue for 1 <= i <= imax, 1 <= k <= kmax.
VerifyReport check_composition(long imax = 4, long kmax = 4);
VerifyReport check_a11_presentation(long samples = 100, long index_bound = 6, std::uint64_t seed = 1);
VerifyReport check_star_consistency(std::uint64_t seed = 1);
/// F^star(p) = q^{2k} F_star(p) for homogeneous p of degree |k| <= kmax, and
/// the tilde identities for i <= imax.
VerifyReport check_degree_shift(long kmax = 4, long imax = 6);
/// Throws InvalidOrder unless m divides 2n.
VerifyReport check_transparent(long n, long m);
VerifyReport check_not_transparent(const XYPoly& s, long m);
/// Pass iff constructing the algebra at each order raises DenominatorVanishes.
VerifyReport check_denominators(const std::vector<long>& orders = {4, 8});
VerifyReport check_leading_terms(long range_bound = 4);

/// Result of the nullspace search. m = 0 means the generic field Q(q).
struct TransparentSubspace {
    long m = 0;
    Bidegree bound;
    /// PQ-basis elements P_k Q_l under the bound, keyed (k, l), in D2 order.
    std::vector<Bidegree> columns;
    /// Nullspace basis in PQ coordinates.
    std::vector<PQCoords> basis;
    /// Order of q^2; empty for Q(q).
    std::optional<long> n;
    /// Spanning set of R[P_n, Q_n] under the bound (constants for Q(q)).
    std::vector<PQCoords> expected;
    bool matches_expected = false;
};

/// Columns are P_k Q_l with D2 <= bound. Throws DenominatorVanishes.
TransparentSubspace search_transparent(long m, Bidegree bound);
/// Reports search_transparent; pass iff the nullspace equals the expected
/// truncation. When 3 divides n nothing is asserted and the result is reported.
VerifyReport check_uniqueness(long m, Bidegree bound);

/// The default suite, ordered by check name.
std::vector<VerifyReport> run_suite();
/// Names accepted by run_named.
const std::vector<std::string>& check_names();
/// Runs the named check (or its default parameter family); empty for unknown names.
std::vector<VerifyReport> run_named(const std::string& name);

} // namespace g2skein
