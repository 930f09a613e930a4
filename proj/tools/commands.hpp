#pragma once

#include <iosfwd>
#include <optional>
#include <string>

#include <dedekind/integers.hpp>
#include <dedekind/primality.hpp>

namespace dedekind::cli {

/* Exit codes: 0 = predicate true / success, 1 = predicate false,
 * 2 = error (bad input, violated precondition, oracle mismatch). */
inline constexpr int kExitTrue = 0;
inline constexpr int kExitFalse = 1;
inline constexpr int kExitError = 2;

struct GlobalOptions {
    bool json = false;
    /* When nonzero, predicate commands cross-check the verdict against the
     * brute-force enumeration oracle whenever the ring fits under the cap. */
    std::size_t oracle_cap = 0;
    PrimalityOptions primality;
};

int cmd_validate(const std::string& ring_path, const GlobalOptions& opts, std::ostream& out,
                 std::ostream& err);
int cmd_norm(const std::string& ring_path, const std::string& ideal_path,
             const std::optional<Int>& h, const GlobalOptions& opts, std::ostream& out,
             std::ostream& err);
int cmd_hnf(const std::string& matrix_path, const std::optional<Int>& h,
            const GlobalOptions& opts, std::ostream& out, std::ostream& err);
int cmd_snf(const std::string& matrix_path, const std::optional<Int>& h,
            const GlobalOptions& opts, std::ostream& out, std::ostream& err);
int cmd_quotient(const std::string& ring_path, const std::string& ideal_path,
                 const std::optional<Int>& h, const GlobalOptions& opts, std::ostream& out,
                 std::ostream& err);
int cmd_is_prime(const std::string& ring_path, const std::string& ideal_path,
                 const std::optional<Int>& h, const GlobalOptions& opts, std::ostream& out,
                 std::ostream& err);
int cmd_is_prime_power(const std::string& ring_path, const std::string& ideal_path,
                       const std::optional<Int>& h, const GlobalOptions& opts,
                       std::ostream& out, std::ostream& err);
int cmd_is_field(const std::string& presentation_path, const GlobalOptions& opts,
                 std::ostream& out, std::ostream& err);
int cmd_is_local(const std::string& presentation_path, const GlobalOptions& opts,
                 std::ostream& out, std::ostream& err);

}  // namespace dedekind::cli
