#pragma once

#include <stdexcept>
#include <string>

#include "koon/system.hpp"

namespace koon {

// Raised for malformed JSON (keeps the parser's line-anchored message) and
// for schema violations (message carries a /path/to/field prefix).
struct SchemaError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Accepted distribution encodings:
//   {"family":"geometric","p":0.25}
//   {"family":"negbinomial","r":2,"p":0.25}
//   {"family":"dweibull","q":0.75,"beta":2.0}
//   {"family":"pmf","weights":[...]}
DiscreteLifetime distribution_from_json_text(const std::string& text);

// System encoding: {"n":int,"k":int,"active":[dist...],"standby":dist},
// or the IID shorthand {"n":int,"k":int,"iid":dist,"standby":dist}.
SystemSpec system_from_json_text(const std::string& text);

// Writers emit the same schema. Residual-transformed distributions have no
// encoding and are rejected.
std::string distribution_to_json_text(const DiscreteLifetime& dist);
std::string system_to_json_text(const SystemSpec& sys);

}  // namespace koon
