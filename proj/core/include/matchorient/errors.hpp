#pragma once

#include <stdexcept>
#include <string>

namespace matchorient {

struct parse_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct loop_error : parse_error {
    using parse_error::parse_error;
};
struct multi_edge_error : parse_error {
    using parse_error::parse_error;
};

// Caller violated a documented operation precondition.
struct precondition_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct walk_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct bipartite_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct no_factor_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct cycle_cap_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct search_cap_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct skew_precondition_error : precondition_error {
    using precondition_error::precondition_error;
};
struct split_error : precondition_error {
    using precondition_error::precondition_error;
};
struct glue_error : precondition_error {
    using precondition_error::precondition_error;
};
struct certificate_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

}  // namespace matchorient
