#pragma once

#include <json.hpp>

#include "sftlab/document.hpp"

namespace sftlab {

struct RunOptions {
    std::size_t block_budget = kDefaultBlockBudget;
    std::string render_dir;  // when nonempty, 2d block listings also go out as PGM files
    bool timing = true;      // false gives byte-identical reports across runs
};

struct RunOutcome {
    nlohmann::ordered_json report;  // one entry per command, in document order
    bool all_ok = true;             // false once any command reports an error
};

// Executes every command of the document.  Failures are per-command: an
// entry gets status "error" and the run carries on.
RunOutcome run_document(const Document& doc, const RunOptions& opt);

}  // namespace sftlab
