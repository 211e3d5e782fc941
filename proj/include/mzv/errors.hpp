#pragma once

#include <stdexcept>
#include <string>

namespace mzv {

// Domain error with a stable machine-readable code (used by the CLI for
// error JSON and exit-code mapping).
class Error : public std::runtime_error {
public:
    Error(std::string code, const std::string& what)
        : std::runtime_error(what), code_(std::move(code)) {}

    const std::string& code() const noexcept { return code_; }

private:
    std::string code_;
};

inline Error word_ends_in_a(const std::string& w) {
    return Error("WordEndsInA", "word '" + w + "' ends in A; no corresponding index");
}
inline Error arity_mismatch(const std::string& what) { return Error("ArityMismatch", what); }
inline Error out_of_region(const std::string& what) { return Error("OutOfRegion", what); }
inline Error non_admissible(const std::string& what) { return Error("NonAdmissible", what); }
inline Error not_in_disc(const std::string& what) { return Error("NotInDisc", what); }
inline Error zero_argument(const std::string& what) { return Error("ZeroArgument", what); }
inline Error truncation_mismatch(const std::string& what) { return Error("TruncationMismatch", what); }
inline Error bad_constant_term(const std::string& what) { return Error("BadConstantTerm", what); }
inline Error unsupported_degree(const std::string& what) { return Error("UnsupportedDegree", what); }
inline Error unevaluatable_t(const std::string& what) { return Error("UnevaluatableT", what); }
inline Error label_mismatch(const std::string& what) { return Error("LabelMismatch", what); }
inline Error unstable_tree(const std::string& what) { return Error("UnstableTree", what); }
inline Error degenerate_quadruple(const std::string& what) { return Error("DegenerateQuadruple", what); }
inline Error singular_point(const std::string& what) { return Error("SingularPoint", what); }
inline Error usage_error(const std::string& what) { return Error("UsageError", what); }

}  // namespace mzv
