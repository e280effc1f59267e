#pragma once

#include <stdexcept>
#include <string>

namespace liardom {

enum class Errc {
    parse_error,
    duplicate_position,
    duplicate_id,
    unknown_id,
    empty_instance,
    unknown_vertex,
    out_of_range_member,
    missing_vertex,
    missing_edge_path,
    degree_too_high,
    isolated_vertex,
    routing_failed,
    invalid_embedding,
    invalid_decomposition,
    no_free_direction,
    separation_violation,
    not_dominating,
    not_liars_dominating,
    budget_exceeded,
    infeasible,
    unsupported_size,
    io_error,
};

const char* errc_name(Errc c);

class Error : public std::runtime_error {
public:
    Error(Errc code, const std::string& what)
        : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}

    Errc code() const { return code_; }

private:
    Errc code_;
};

[[noreturn]] inline void raise(Errc code, const std::string& what) { throw Error(code, what); }

inline const char* errc_name(Errc c) {
    switch (c) {
        case Errc::parse_error: return "ParseError";
        case Errc::duplicate_position: return "DuplicatePosition";
        case Errc::duplicate_id: return "DuplicateId";
        case Errc::unknown_id: return "UnknownId";
        case Errc::empty_instance: return "EmptyInstance";
        case Errc::unknown_vertex: return "UnknownVertex";
        case Errc::out_of_range_member: return "OutOfRangeMember";
        case Errc::missing_vertex: return "MissingVertex";
        case Errc::missing_edge_path: return "MissingEdgePath";
        case Errc::degree_too_high: return "DegreeTooHigh";
        case Errc::isolated_vertex: return "IsolatedVertex";
        case Errc::routing_failed: return "RoutingFailed";
        case Errc::invalid_embedding: return "InvalidEmbedding";
        case Errc::invalid_decomposition: return "InvalidDecomposition";
        case Errc::no_free_direction: return "NoFreeDirection";
        case Errc::separation_violation: return "SeparationViolation";
        case Errc::not_dominating: return "NotDominating";
        case Errc::not_liars_dominating: return "NotLiarsDominating";
        case Errc::budget_exceeded: return "BudgetExceeded";
        case Errc::infeasible: return "Infeasible";
        case Errc::unsupported_size: return "UnsupportedSize";
        case Errc::io_error: return "IoError";
    }
    return "Error";
}

} // namespace liardom
