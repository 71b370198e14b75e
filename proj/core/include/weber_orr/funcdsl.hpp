#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

namespace weber_orr {

// Expression of one real variable x:
//   expr  := term (('+' | '-') term)*
//   term  := unary (('*' | '/') unary)*
//   unary := '-' unary | power
//   power := atom ('^' unary)?          right associative, binds tighter than '-'
//   atom  := number | 'x' | 'pi' | 'e' | func '(' expr (',' expr)? ')' | '(' expr ')'
//   func  := exp | log | sin | cos | sqrt | pow
class FunctionExpr {
public:
    enum class Op : std::uint8_t { Number, Var, Neg, Add, Sub, Mul, Div, Pow, Exp, Log, Sin, Cos, Sqrt };

    struct Node {
        Op op;
        double value;        // Number only
        int lhs;             // child indices, -1 when absent
        int rhs;
        std::size_t offset;  // position in the source text
    };

    FunctionExpr() = default;

    // Throws EvalError (a DomainError) with the offset of the failing operation.
    double eval(double x) const;

    // Canonical text; parses back to an identical tree.
    std::string to_string() const;

    const std::string& source() const { return source_; }
    bool empty() const { return nodes_.empty(); }

    // Structural equality, ignoring source offsets.
    bool same_tree(const FunctionExpr& other) const;

private:
    friend FunctionExpr parse_expr(std::string_view text);

    struct Instr {
        Op op;
        double value;
        std::uint32_t node;
    };

    std::string source_;
    std::vector<Node> nodes_;
    int root_ = -1;
    std::vector<Instr> program_;  // postfix order
    std::size_t max_depth_ = 0;
};

// Throws ParseError with a 0-based offset.
FunctionExpr parse_expr(std::string_view text);

inline double eval_expr(const FunctionExpr& expr, double x) { return expr.eval(x); }

}  // namespace weber_orr
