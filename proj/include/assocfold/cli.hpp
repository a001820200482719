#ifndef ASSOCFOLD_CLI_HPP
#define ASSOCFOLD_CLI_HPP

/**
 * Command-line front end and canonical artifact serialization.
 *
 * Subcommands: list-types, build, knit, fold, verify, export.  Every JSON
 * artifact is emitted with a fixed key order, exact coefficient strings and
 * 12-digit decimal companions, so repeated runs are byte-identical.  Exit
 * codes: 0 success, 1 verification failure, 2 invalid input, 3 internal
 * assertion.  Failures print a machine-readable {"error": ...} object.
 *
 * The string-returning helpers below are the same routines the subcommands
 * use; the Python module and the tests call them directly.
 */

#include <cstdint>
#include <string>
#include <vector>

#include "assocfold/common.hpp"

namespace assocfold::cli {

/** Default sampling seed for fan-completeness and identity spot checks. */
inline constexpr std::uint64_t kDefaultSeed = 9001;

/** Builds whose ambient vertex count exceeds this need the --deep flag. */
inline constexpr long kDeepThreshold = 10000;

/** Shared option bundle for the artifact helpers. */
struct Options {
    std::string type;                       ///< build/knit selection
    std::string source;                     ///< folding source (may be empty)
    std::string target;                     ///< folding target
    std::string orientation = "bipartite";  ///< "bipartite" or an arrow-list file
    std::string base = "1";                 ///< mesh parameter, rational literal
    int dihedral = 0;                       ///< completes a bare "I2" type, 0 = unset
    std::uint64_t seed = kDefaultSeed;
    bool deep = false;
};

/** Entry points; return the process exit code. */
int run(int argc, const char* const* argv);
int run(const std::vector<std::string>& args);

/** Supported type table (text, and the JSON twin). */
std::string list_types_text();
std::string list_types_json_text();

/** One line per supported folding family. */
std::string fold_pairs_text();

/** Knitted translation-quiver grid, mesh relations included. */
std::string knit_grid_text(const Options& opts);
std::string knit_json_text(const Options& opts);

/**
 * Polytope artifact for opts.type: the ambient realization for a simply-laced
 * type, the folded section (from opts.source or the canonical source) for a
 * multiply-laced or noncrystallographic one.
 */
std::string build_json_text(const Options& opts);
std::string build_off_text(const Options& opts);

/** Folded section artifact for opts.target (polytope plus normal fan). */
std::string fold_json_text(const Options& opts);
std::string fold_off_text(const Options& opts);

/**
 * Section verification report: one pass/fail entry per check, with witness
 * counts.  `all_passed`, when given, receives the conjunction.
 */
std::string verify_report_text(const Options& opts, bool* all_passed = nullptr);

/**
 * Parse a previously exported polytope artifact and re-serialize it; the
 * result is byte-identical to the original for canonical inputs.
 */
std::string reserialize_polytope(const std::string& json_text);

/** OFF conversion of a previously exported polytope artifact. */
std::string off_from_artifact(const std::string& json_text);

}  // namespace assocfold::cli

#endif  // ASSOCFOLD_CLI_HPP
