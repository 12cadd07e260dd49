#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

#include <boost/container/small_vector.hpp>
#include <boost/rational.hpp>

namespace speiser {

using VertexId = std::uint64_t;
using Rational = boost::rational<std::int64_t>;

// A half-edge leaving a vertex: target and the slot of the reverse half-edge at the target.
struct Dart {
    VertexId to = 0;
    int back = 0;
    bool operator==(const Dart&) const = default;
};

using DartList = boost::container::small_vector<Dart, 8>;

enum class ErrorCode {
    LoopEdge,
    AsymmetricAdjacency,
    RotationNotCyclic,
    InfiniteFace,
    OracleDivergence,
    UnknownFaceSize,
    NotHomogeneous,
    NotBipartite,
    OddFace,
    BadDegree,
    InconsistentLabeling,
    BadCircumference,
    NotValidated,
    Disconnected,
    SolverStall,
    TooFewEntries,
    OverlappingAnnuli,
    Inadmissible,
    NotSeparating,
    NotDisjoint,
    UnknownTag,
    BadBridgeRule,
    EvenSubdivision,
    WindowTooSmall,
    BadArgument,
};

const char* error_name(ErrorCode code);

class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& what)
        : std::runtime_error(std::string(error_name(code)) + ": " + what), code_(code) {}
    ErrorCode code() const { return code_; }

private:
    ErrorCode code_;
};

double to_double(const Rational& q);

}  // namespace speiser
