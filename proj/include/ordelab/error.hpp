#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace ord {

enum class Errc {
    NotReflexive,
    NotAntisymmetric,
    NotTransitive,
    CapExceeded,
    NoLub,
    EmptyJoinWithoutBottom,
    NoBottom,
    NoTop,
    NotALattice,
    EmptyComplement,
    BadInput,
    BadSpec,
    TruncationNotJoinClosed,
    NotIndependent,
    NotAnAntichain,
    SeparationFailedAtStep,
    WitnessSearchExhausted,
    PreconditionViolated,
    BudgetExhausted,
    UnknownTheoremId,
};

const char* errc_name(Errc c);

// Single exception type; `where` carries the witness indices relevant to the
// failure (element labels, chain steps, ...).
class Error : public std::runtime_error {
public:
    Error(Errc code, std::string msg, std::vector<long long> where = {})
        : std::runtime_error(std::string(errc_name(code)) + ": " + msg),
          code_(code),
          where_(std::move(where)) {}

    Errc code() const { return code_; }
    const std::vector<long long>& where() const { return where_; }

private:
    Errc code_;
    std::vector<long long> where_;
};

} // namespace ord
