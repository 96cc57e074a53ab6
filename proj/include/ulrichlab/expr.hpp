#pragma once

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "ulrichlab/artinian.hpp"
#include "ulrichlab/homology.hpp"
#include "ulrichlab/ulrich.hpp"
#include "ulrichlab/verify.hpp"

namespace ulab {

// Abstract syntax for the small build-and-query language. A node is an
// integer literal, a bare name, or a call name(arg, ...). Calls keep the
// source position for error reporting; artin calls record where the ';'
// separates the variable count from the relation monomials.
struct ExprNode {
  enum class Kind { IntLit, Name, Call };
  Kind kind = Kind::IntLit;
  long ival = 0;
  std::string name;
  std::vector<ExprNode> args;
  int semi_at = -1;  // args[semi_at..] sit after the ';' in an artin call
  int line = 1;
  int col = 0;
};

struct LetStmt {
  std::string name;
  ExprNode value;
};

// The trailing query of a program. `kind` is one of classify, aclassify,
// tor, ext, resolve, dualitycheck, verify.
struct Query {
  std::string kind;
  std::vector<ExprNode> args;
  std::string verify_id;
  long verify_max_gen = 9;
  long verify_max_deg = 30;
  int verify_jobs = 1;
};

struct Program {
  std::vector<LetStmt> lets;
  Query query;
};

Program parse_program(const std::string& text);

std::string print_expr(const ExprNode& e);
std::string print_program(const Program& p);
bool expr_equal(const ExprNode& a, const ExprNode& b);

using Value =
    std::variant<long, SgpPtr, RelativeIdeal, PresentedModule, ArtinModule>;

// Evaluation result of a program's query. Exactly one payload is set,
// matching `kind`; `failed` marks a query that found a mismatch and
// `errored` marks collected per-instance errors inside a verifier run.
struct EvalResult {
  std::string kind;
  std::optional<UlrichReport> ulrich;
  std::optional<ArtinInvariants> artin;
  std::optional<FiniteLengthTable> table;
  int table_index = 0;
  std::vector<long> betti;
  std::vector<DualityRow> duality;
  std::optional<VerifierReport> verifier;
  bool failed = false;
  bool errored = false;
};

EvalResult eval_program(const Program& p);
EvalResult eval_text(const std::string& text);

// classify with a separately supplied ideal expression, the --ideal path;
// both texts are parsed as bare expressions against one environment
EvalResult eval_classify_with_ideal(const std::string& text,
                                    const std::string& ideal_text);

}  // namespace ulab
