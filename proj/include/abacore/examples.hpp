#pragma once

// Worked end-to-end instances on fixed inputs. Each run prints every
// intermediate object and ends with explicit check verdicts; the ids are
// the published instance names used by the CLI.

#include <string>
#include <vector>

namespace abacore {

std::vector<std::string> example_ids();

std::string run_example(const std::string& id);       // plain text
std::string run_example_json(const std::string& id);  // one JSON object

}  // namespace abacore
