#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "steinhaus/bit_seq.hpp"
#include "steinhaus/families.hpp"
#include "steinhaus/spectrum.hpp"

namespace steinhaus {

enum class CheckStatus { pass, fail, conjecture_confirmed, conjecture_refuted, skipped };

/// "pass", "fail", "conjecture-confirmed", "conjecture-refuted", "skipped".
std::string to_string(CheckStatus status);
CheckStatus parse_check_status(std::string_view text);

/**
 * Outcome of one check at one length (or a range, for the small-n table).
 *
 * A fail or conjecture-refuted record always carries a witness. For
 * weight checks `observed` is the triangle weight of the witness; for
 * the s3 check it is s3 of the witness.
 */
struct CheckRecord {
    std::string id;
    std::size_t n_min = 0;
    std::size_t n_max = 0;
    CheckStatus status = CheckStatus::skipped;
    std::optional<BitSeq> witness;
    std::optional<std::size_t> observed;
    std::optional<std::size_t> predicted;
    std::string detail;
    double elapsed_ms = 0.0;

    /// Equality ignoring elapsed_ms.
    bool same_outcome(const CheckRecord& other) const;
};

struct VerificationReport {
    std::size_t n_min = 0;
    std::size_t n_max = 0;
    std::vector<CheckRecord> checks;  // ordered by (n_min, check id rank)

    std::size_t count(CheckStatus status) const;
    bool same_outcome(const VerificationReport& other) const;
};

/// Check ids in report order.
const std::vector<std::string>& check_ids();

struct VerifyOptions {
    EnumerationOptions enumeration;
    std::size_t s3_ceiling = 20;
};

CheckRecord verify_level(std::size_t n, Level level, const VerifyOptions& options = {});

/// One record per n in {1, 2, 3, 4}: the whole ladder against the stored classification.
std::vector<CheckRecord> verify_small_n(const VerifyOptions& options = {});

CheckRecord verify_ek(std::size_t n, const VerifyOptions& options = {});

CheckRecord verify_s3(std::size_t n, const VerifyOptions& options = {});

/// Throws std::invalid_argument unless n >= 11, n = 0 or 2 (mod 3), and n is within the ceiling.
CheckRecord check_conjecture(std::size_t n, const VerifyOptions& options = {});

/// Throws std::invalid_argument unless 1 <= n_min <= n_max <= ceiling.
VerificationReport verify_all(std::size_t n_min, std::size_t n_max, const VerifyOptions& options = {});

/// 1 if any check failed, else 3 if a conjecture was refuted, else 0.
int exit_code(const VerificationReport& report);

}  // namespace steinhaus
