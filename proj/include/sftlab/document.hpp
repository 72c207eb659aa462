#pragma once

#include <optional>

#include "sftlab/perturb.hpp"
#include "sftlab/toeplitz.hpp"

namespace sftlab {

// One `cmd` line, kept as raw tokens; the parser has already checked arity
// and that every referenced name exists.
struct Command {
    std::string op;
    std::vector<std::string> args;
    int line = 0;
};

// A parsed document: one dimension, one alphabet, named objects, commands.
struct Document {
    int dim = 1;
    Alphabet alphabet;
    std::map<std::string, Sft> sfts;
    std::map<std::string, SlidingBlockCode> codes;
    std::map<std::string, ToeplitzSpec> toeplitz;
    std::vector<Command> commands;
};

struct ParseError {
    int line = 0;
    std::string message;
};

struct ParseOutcome {
    std::optional<Document> document;  // present iff errors is empty
    std::vector<ParseError> errors;
};

// Line-oriented format.  `#` starts a comment; `{ ... }` blocks may span
// lines; everything else is one statement per line:
//
//   dim 1
//   alphabet 0 1
//   sft golden { forbid (0)=1 (1)=1 }
//   code id { radius 0 ; default 0 ; map (0)=0 -> 0 ; map (0)=1 -> 1 }
//   toeplitz t1 { omega 1 0 1 1 }
//   cmd blocks golden 1
ParseOutcome parse_document(std::string_view text);

}  // namespace sftlab
