#pragma once

#include <optional>
#include <string>
#include <vector>

#include "cayley/urbantke.hpp"

// Named fixtures reachable from the command line as builtin:<name>.
// They are built by the constructors, never stored as data.
namespace cayley::builtin {

std::optional<Form> form(const std::string& name);
std::optional<FormTriple> triple(const std::string& name);
std::optional<Spinor> spinor(const std::string& name);
std::optional<SMat> metric(const std::string& name);

std::vector<std::string> form_names();
std::vector<std::string> triple_names();
std::vector<std::string> spinor_names();
std::vector<std::string> metric_names();

}  // namespace cayley::builtin
