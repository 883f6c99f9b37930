#pragma once

#include <string>
#include <vector>

#include "antlyzer/matrix.hpp"
#include "antlyzer/rational.hpp"

namespace antlyzer {

// Loop mini-language (whitespace-insensitive):
//
//   program := "vars" ident ("," ident)* ";"
//              "while" "(" cond ("&&" cond)* ")" "{" (ident ":=" expr ";")* "}"
//   cond    := expr (">" | "<" | ">=" | "<=") expr
//   expr    := ["-"] term (("+" | "-") term)*
//   term    := [rat "*"] ident | rat            (implicit "1/2y" means "1/2*y")
//   rat     := int ["/" int]

enum class rel_op { gt, lt, ge, le };

// linear expression folded onto the declared variables
struct ast_expr {
    std::vector<rational> coeffs; // one slot per declared variable
    rational constant;

    bool operator==(const ast_expr&) const = default;
};

struct ast_condition {
    ast_expr lhs;
    rel_op op = rel_op::gt;
    ast_expr rhs;

    bool operator==(const ast_condition&) const = default;
};

struct ast_assignment {
    size_t target = 0; // variable index
    ast_expr value;

    bool operator==(const ast_assignment&) const = default;
};

struct program_ast {
    std::vector<std::string> vars;
    std::vector<ast_condition> guard;
    std::vector<ast_assignment> body;

    bool operator==(const program_ast&) const = default;
};

enum class domain_kind { integers, rationals, reals };

std::string domain_name(domain_kind d);

// throws parse_error / nonlinear_term_error / undeclared_variable_error
program_ast parse(const std::string& text);

// canonical source text; parse(pretty_print(ast)) == ast
std::string pretty_print(const program_ast& ast);

// Sequential left-to-right semantics: each assignment reads the already
// updated state. Returns (A, c) with new_x = A . old_x + c.
std::pair<matrix, std::vector<rational>> compose_assignments(const program_ast& ast);

struct guard_rows {
    std::vector<row_form> f; // homogeneous rows
    std::vector<rational> b; // guard i is  f_i . x > b_i
};

// "<" flips the row; ">=" / "<=" are exact only over the integers, where the
// row is scaled to integer coefficients and the bound dropped by one.
// throws nonstrict_unsupported_error otherwise
guard_rows normalize_guard(const program_ast& ast, domain_kind domain);

struct loop_program {
    matrix a;                       // rational update matrix
    std::vector<row_form> f;        // homogeneous guard rows
    std::vector<rational> b;        // f_i . x > b_i
    std::vector<scalar> c;          // translation (affine part)
    std::vector<std::string> names;
    domain_kind domain = domain_kind::integers;

    bool is_homogeneous() const; // b = 0 and c = 0
};

loop_program build_program(const program_ast& ast, domain_kind domain);

} // namespace antlyzer
