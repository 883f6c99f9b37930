#include "antlyzer/frontend.hpp"

#include <cctype>
#include <map>

#include "antlyzer/error.hpp"

namespace antlyzer {

namespace {

enum class tok_kind {
    ident, number,
    comma, semi, lparen, rparen, lbrace, rbrace,
    assign, plus, minus, star, slash,
    gt, lt, ge, le, andand,
    end
};

struct token {
    tok_kind kind;
    std::string text;
    size_t line, col;
};

class lexer {
  public:
    explicit lexer(const std::string& text) : s_(text) {}

    token next() {
        skip_ws();
        const size_t line = line_, col = col_;
        if (pos_ >= s_.size()) return {tok_kind::end, "", line, col};
        const char c = s_[pos_];
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            std::string t;
            while (pos_ < s_.size() &&
                   (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_'))
                t += take();
            return {tok_kind::ident, t, line, col};
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            std::string t;
            while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_])))
                t += take();
            return {tok_kind::number, t, line, col};
        }
        take();
        switch (c) {
            case ',': return {tok_kind::comma, ",", line, col};
            case ';': return {tok_kind::semi, ";", line, col};
            case '(': return {tok_kind::lparen, "(", line, col};
            case ')': return {tok_kind::rparen, ")", line, col};
            case '{': return {tok_kind::lbrace, "{", line, col};
            case '}': return {tok_kind::rbrace, "}", line, col};
            case '+': return {tok_kind::plus, "+", line, col};
            case '-': return {tok_kind::minus, "-", line, col};
            case '*': return {tok_kind::star, "*", line, col};
            case '/': return {tok_kind::slash, "/", line, col};
            case ':':
                if (pos_ < s_.size() && s_[pos_] == '=') {
                    take();
                    return {tok_kind::assign, ":=", line, col};
                }
                throw parse_error(line, col, "expected ':=' after ':'");
            case '>':
                if (pos_ < s_.size() && s_[pos_] == '=') {
                    take();
                    return {tok_kind::ge, ">=", line, col};
                }
                return {tok_kind::gt, ">", line, col};
            case '<':
                if (pos_ < s_.size() && s_[pos_] == '=') {
                    take();
                    return {tok_kind::le, "<=", line, col};
                }
                return {tok_kind::lt, "<", line, col};
            case '&':
                if (pos_ < s_.size() && s_[pos_] == '&') {
                    take();
                    return {tok_kind::andand, "&&", line, col};
                }
                throw parse_error(line, col, "expected '&&'");
            default:
                throw parse_error(line, col, std::string("unexpected character '") + c + "'");
        }
    }

  private:
    char take() {
        const char c = s_[pos_++];
        if (c == '\n') {
            ++line_;
            col_ = 1;
        } else {
            ++col_;
        }
        return c;
    }
    void skip_ws() {
        while (pos_ < s_.size() &&
               std::isspace(static_cast<unsigned char>(s_[pos_])))
            take();
    }

    const std::string& s_;
    size_t pos_ = 0, line_ = 1, col_ = 1;
};

class parser {
  public:
    explicit parser(const std::string& text) : lex_(text) { advance(); }

    program_ast run() {
        expect_keyword("vars");
        do {
            const token name = expect(tok_kind::ident, "variable name");
            if (index_.count(name.text))
                throw parse_error(name.line, name.col, "variable '" + name.text +
                                                           "' declared twice");
            index_[name.text] = ast_.vars.size();
            ast_.vars.push_back(name.text);
        } while (accept(tok_kind::comma));
        expect(tok_kind::semi, "';' after the vars list");

        expect_keyword("while");
        expect(tok_kind::lparen, "'(' after while");
        do {
            ast_.guard.push_back(condition());
        } while (accept(tok_kind::andand));
        expect(tok_kind::rparen, "')' after the loop condition");

        expect(tok_kind::lbrace, "'{' to open the loop body");
        while (!accept(tok_kind::rbrace)) {
            const token name = expect(tok_kind::ident, "assignment target");
            ast_assignment as;
            as.target = var_index(name);
            expect(tok_kind::assign, "':=' after the assignment target");
            as.value = expression();
            expect(tok_kind::semi, "';' after the assignment");
            ast_.body.push_back(std::move(as));
        }
        if (cur_.kind != tok_kind::end)
            throw parse_error(cur_.line, cur_.col, "trailing input after the loop body");
        return std::move(ast_);
    }

  private:
    void advance() { cur_ = lex_.next(); }
    bool accept(tok_kind k) {
        if (cur_.kind != k) return false;
        advance();
        return true;
    }
    token expect(tok_kind k, const std::string& what) {
        if (cur_.kind != k)
            throw parse_error(cur_.line, cur_.col,
                              "expected " + what + ", found '" + cur_.text + "'");
        token t = cur_;
        advance();
        return t;
    }
    void expect_keyword(const std::string& kw) {
        if (cur_.kind != tok_kind::ident || cur_.text != kw)
            throw parse_error(cur_.line, cur_.col,
                              "expected '" + kw + "', found '" + cur_.text + "'");
        advance();
    }

    size_t var_index(const token& name) {
        auto it = index_.find(name.text);
        if (it == index_.end())
            throw undeclared_variable_error(name.line, name.col,
                                            "undeclared variable '" + name.text + "'");
        return it->second;
    }

    ast_condition condition() {
        ast_condition c;
        c.lhs = expression();
        switch (cur_.kind) {
            case tok_kind::gt: c.op = rel_op::gt; break;
            case tok_kind::lt: c.op = rel_op::lt; break;
            case tok_kind::ge: c.op = rel_op::ge; break;
            case tok_kind::le: c.op = rel_op::le; break;
            default:
                throw parse_error(cur_.line, cur_.col,
                                  "expected a comparison (>, <, >=, <=), found '" + cur_.text +
                                      "'");
        }
        advance();
        c.rhs = expression();
        return c;
    }

    ast_expr expression() {
        ast_expr e;
        e.coeffs.assign(ast_.vars.size(), rational(0));
        bool negate = accept(tok_kind::minus);
        for (;;) {
            term(e, negate);
            if (accept(tok_kind::plus)) {
                negate = false;
            } else if (accept(tok_kind::minus)) {
                negate = true;
            } else {
                return e;
            }
        }
    }

    rational number_literal() {
        const token num = expect(tok_kind::number, "a number");
        bigint p(num.text);
        if (accept(tok_kind::slash)) {
            const token den = expect(tok_kind::number, "a denominator");
            bigint q(den.text);
            if (q == 0) throw parse_error(den.line, den.col, "zero denominator in literal");
            return rational(p, q);
        }
        return rational(p);
    }

    void term(ast_expr& e, bool negate) {
        if (cur_.kind == tok_kind::number) {
            rational r = number_literal();
            if (negate) r = -r;
            if (accept(tok_kind::star)) {
                const token name = expect(tok_kind::ident, "a variable after '*'");
                e.coeffs[var_index(name)] += r;
            } else if (cur_.kind == tok_kind::ident) { // implicit 1/2y
                e.coeffs[var_index(cur_)] += r;
                advance();
            } else {
                e.constant += r;
            }
            return;
        }
        if (cur_.kind == tok_kind::ident) {
            const token name = cur_;
            advance();
            if (cur_.kind == tok_kind::star) {
                // "x * ..." - a coefficient must come first; "x*y" is nonlinear
                token star = cur_;
                advance();
                if (cur_.kind == tok_kind::ident)
                    throw nonlinear_term_error(name.line, name.col,
                                               "product of variables '" + name.text + "*" +
                                                   cur_.text + "' is not linear");
                throw parse_error(star.line, star.col,
                                  "coefficients must be written before the variable");
            }
            e.coeffs[var_index(name)] += negate ? rational(-1) : rational(1);
            return;
        }
        throw parse_error(cur_.line, cur_.col,
                          "expected a term, found '" + cur_.text + "'");
    }

    lexer lex_;
    token cur_{};
    program_ast ast_;
    std::map<std::string, size_t> index_;
};

std::string expr_to_string(const ast_expr& e, const std::vector<std::string>& names) {
    std::string out;
    auto add = [&](const rational& c, const std::string& var) {
        if (c.is_zero()) return;
        const bool neg = c.sign() < 0;
        const rational mag = neg ? -c : c;
        std::string term;
        if (var.empty()) {
            term = mag.str();
        } else if (mag.is_one()) {
            term = var;
        } else {
            term = mag.str() + "*" + var;
        }
        if (out.empty()) {
            out = neg ? "-" + term : term;
        } else {
            out += neg ? " - " : " + ";
            out += term;
        }
    };
    for (size_t j = 0; j < e.coeffs.size(); ++j) add(e.coeffs[j], names[j]);
    add(e.constant, "");
    return out.empty() ? "0" : out;
}

std::string op_text(rel_op op) {
    switch (op) {
        case rel_op::gt: return ">";
        case rel_op::lt: return "<";
        case rel_op::ge: return ">=";
        case rel_op::le: return "<=";
    }
    return ">";
}

} // namespace

std::string domain_name(domain_kind d) {
    switch (d) {
        case domain_kind::integers: return "int";
        case domain_kind::rationals: return "rat";
        case domain_kind::reals: return "real";
    }
    return "int";
}

program_ast parse(const std::string& text) { return parser(text).run(); }

std::string pretty_print(const program_ast& ast) {
    std::string out = "vars ";
    for (size_t i = 0; i < ast.vars.size(); ++i) {
        if (i) out += ", ";
        out += ast.vars[i];
    }
    out += ";\nwhile (";
    for (size_t i = 0; i < ast.guard.size(); ++i) {
        if (i) out += " && ";
        out += expr_to_string(ast.guard[i].lhs, ast.vars) + " " + op_text(ast.guard[i].op) +
               " " + expr_to_string(ast.guard[i].rhs, ast.vars);
    }
    out += ") {\n";
    for (const auto& as : ast.body)
        out += "  " + ast.vars[as.target] + " := " + expr_to_string(as.value, ast.vars) + ";\n";
    out += "}\n";
    return out;
}

std::pair<matrix, std::vector<rational>> compose_assignments(const program_ast& ast) {
    const size_t n = ast.vars.size();
    // running substitution: current_x = M . old_x + k
    std::vector<std::vector<rational>> m(n, std::vector<rational>(n, rational(0)));
    std::vector<rational> k(n, rational(0));
    for (size_t i = 0; i < n; ++i) m[i][i] = rational(1);

    for (const auto& as : ast.body) {
        std::vector<rational> row(n, rational(0));
        rational cst = as.value.constant;
        for (size_t j = 0; j < n; ++j) {
            const rational& c = as.value.coeffs[j];
            if (c.is_zero()) continue;
            for (size_t l = 0; l < n; ++l) row[l] += c * m[j][l];
            cst += c * k[j];
        }
        m[as.target] = std::move(row);
        k[as.target] = cst;
    }

    matrix a(n, n);
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j) a.at(i, j) = scalar(m[i][j]);
    return {a, k};
}

guard_rows normalize_guard(const program_ast& ast, domain_kind domain) {
    const size_t n = ast.vars.size();
    guard_rows out;
    for (const auto& cond : ast.guard) {
        // move everything left: diff = lhs - rhs, then diff REL 0
        std::vector<rational> row(n);
        for (size_t j = 0; j < n; ++j) row[j] = cond.lhs.coeffs[j] - cond.rhs.coeffs[j];
        rational cst = cond.lhs.constant - cond.rhs.constant;
        const bool strict = cond.op == rel_op::gt || cond.op == rel_op::lt;
        if (cond.op == rel_op::lt || cond.op == rel_op::le) {
            for (auto& v : row) v = -v;
            cst = -cst;
        }
        // now: row . x + cst > 0 (strict) or >= 0
        rational bound = -cst;
        if (!strict) {
            if (domain != domain_kind::integers)
                throw nonstrict_unsupported_error(
                    "non-strict comparison is only exact over int, not " + domain_name(domain));
            bigint den = bound.den();
            for (const auto& v : row) den = lcm(den, v.den());
            const rational scale(den);
            for (auto& v : row) v *= scale;
            bound = bound * scale - rational(1); // row >= b  <=>  row > b - 1
        }
        row_form rf;
        rf.coeffs.reserve(n);
        for (const auto& v : row) rf.coeffs.emplace_back(v);
        rf.constant = scalar(0);
        out.f.push_back(std::move(rf));
        out.b.push_back(bound);
    }
    return out;
}

bool loop_program::is_homogeneous() const {
    for (const auto& v : b)
        if (!v.is_zero()) return false;
    for (const auto& v : c)
        if (!v.is_zero()) return false;
    return true;
}

loop_program build_program(const program_ast& ast, domain_kind domain) {
    loop_program p;
    auto [a, c] = compose_assignments(ast);
    p.a = std::move(a);
    p.c.reserve(c.size());
    for (const auto& v : c) p.c.emplace_back(v);
    auto g = normalize_guard(ast, domain);
    p.f = std::move(g.f);
    p.b = std::move(g.b);
    p.names = ast.vars;
    p.domain = domain;
    return p;
}

} // namespace antlyzer
