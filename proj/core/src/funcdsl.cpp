#include <algorithm>
#include <array>
#include <cctype>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <string>

#include "weber_orr/errors.hpp"
#include "weber_orr/funcdsl.hpp"

namespace weber_orr {
namespace {

constexpr std::size_t kMaxDepth = 128;
constexpr double kPiValue = 3.141592653589793238462643383279502884;
constexpr double kEValue = 2.718281828459045235360287471352662498;

using Op = FunctionExpr::Op;
using Node = FunctionExpr::Node;

class Parser {
public:
    Parser(std::string_view text, std::vector<Node>& nodes) : text_(text), nodes_(nodes) {}

    int parse() {
        const int root = expr(0);
        skip();
        if (pos_ != text_.size()) fail("unexpected '" + std::string(1, text_[pos_]) + "'");
        return root;
    }

private:
    std::string_view text_;
    std::vector<Node>& nodes_;
    std::size_t pos_ = 0;

    [[noreturn]] void fail(const std::string& msg) const { throw ParseError("syntax error: " + msg, pos_); }

    void skip() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }

    bool accept(char c) {
        skip();
        if (pos_ < text_.size() && text_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    void expect(char c) {
        skip();
        if (pos_ >= text_.size()) fail(std::string("expected '") + c + "' but input ended");
        if (text_[pos_] != c) fail(std::string("expected '") + c + "'");
        ++pos_;
    }

    int add(Op op, double value, int lhs, int rhs, std::size_t offset) {
        nodes_.push_back({op, value, lhs, rhs, offset});
        return static_cast<int>(nodes_.size()) - 1;
    }

    void guard(std::size_t depth) const {
        if (depth > kMaxDepth) throw ParseError("expression nested too deeply", pos_);
    }

    int expr(std::size_t depth) {
        guard(depth);
        int left = term(depth + 1);
        while (true) {
            skip();
            const std::size_t at = pos_;
            if (accept('+')) {
                left = add(Op::Add, 0.0, left, term(depth + 1), at);
            } else if (accept('-')) {
                left = add(Op::Sub, 0.0, left, term(depth + 1), at);
            } else {
                return left;
            }
        }
    }

    int term(std::size_t depth) {
        guard(depth);
        int left = unary(depth + 1);
        while (true) {
            skip();
            const std::size_t at = pos_;
            if (accept('*')) {
                left = add(Op::Mul, 0.0, left, unary(depth + 1), at);
            } else if (accept('/')) {
                left = add(Op::Div, 0.0, left, unary(depth + 1), at);
            } else {
                return left;
            }
        }
    }

    int unary(std::size_t depth) {
        guard(depth);
        skip();
        const std::size_t at = pos_;
        if (accept('-')) return add(Op::Neg, 0.0, unary(depth + 1), -1, at);
        return power(depth + 1);
    }

    int power(std::size_t depth) {
        guard(depth);
        const int base = atom(depth + 1);
        skip();
        const std::size_t at = pos_;
        if (accept('^')) return add(Op::Pow, 0.0, base, unary(depth + 1), at);
        return base;
    }

    int number() {
        const std::size_t start = pos_;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
        if (pos_ < text_.size() && text_[pos_] == '.') {
            ++pos_;
            while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
        }
        // An exponent only when digits follow; otherwise 'e' is left for the caller.
        if (pos_ < text_.size() && (text_[pos_] == 'e' || text_[pos_] == 'E')) {
            std::size_t q = pos_ + 1;
            if (q < text_.size() && (text_[q] == '+' || text_[q] == '-')) ++q;
            if (q < text_.size() && std::isdigit(static_cast<unsigned char>(text_[q]))) {
                pos_ = q;
                while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
            }
        }
        const std::string lexeme(text_.substr(start, pos_ - start));
        if (lexeme == ".") {
            pos_ = start;
            fail("malformed number");
        }
        double v = 0.0;
        const auto res = std::from_chars(lexeme.data(), lexeme.data() + lexeme.size(), v);
        if (res.ec != std::errc() || res.ptr != lexeme.data() + lexeme.size()) {
            pos_ = start;
            fail("malformed number");
        }
        return add(Op::Number, v, -1, -1, start);
    }

    int atom(std::size_t depth) {
        guard(depth);
        skip();
        if (pos_ >= text_.size()) fail("unexpected end of input");
        const char c = text_[pos_];
        const std::size_t at = pos_;
        if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') return number();
        if (c == '(') {
            ++pos_;
            const int inner = expr(depth + 1);
            expect(')');
            return inner;
        }
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            while (pos_ < text_.size() &&
                   (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_')) {
                ++pos_;
            }
            const std::string_view id = text_.substr(at, pos_ - at);
            if (id == "x") return add(Op::Var, 0.0, -1, -1, at);
            if (id == "pi") return add(Op::Number, kPiValue, -1, -1, at);
            if (id == "e") return add(Op::Number, kEValue, -1, -1, at);
            Op op;
            int arity = 1;
            if (id == "exp") {
                op = Op::Exp;
            } else if (id == "log") {
                op = Op::Log;
            } else if (id == "sin") {
                op = Op::Sin;
            } else if (id == "cos") {
                op = Op::Cos;
            } else if (id == "sqrt") {
                op = Op::Sqrt;
            } else if (id == "pow") {
                op = Op::Pow;
                arity = 2;
            } else {
                throw ParseError("unknown identifier '" + std::string(id) + "'", at);
            }
            expect('(');
            const int first = expr(depth + 1);
            int second = -1;
            if (arity == 2) {
                expect(',');
                second = expr(depth + 1);
            }
            skip();
            if (pos_ < text_.size() && text_[pos_] == ',') fail("too many arguments to '" + std::string(id) + "'");
            expect(')');
            return add(op, 0.0, first, second, at);
        }
        fail("unexpected '" + std::string(1, c) + "'");
    }
};

void flatten(const std::vector<Node>& nodes, int idx, std::vector<FunctionExpr::Node>& order) {
    const Node& n = nodes[idx];
    if (n.lhs >= 0) flatten(nodes, n.lhs, order);
    if (n.rhs >= 0) flatten(nodes, n.rhs, order);
    order.push_back(n);
}

std::string format_number(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

const char* func_name(Op op) {
    switch (op) {
        case Op::Exp: return "exp";
        case Op::Log: return "log";
        case Op::Sin: return "sin";
        case Op::Cos: return "cos";
        case Op::Sqrt: return "sqrt";
        default: return "";
    }
}

std::string print(const std::vector<Node>& nodes, int idx) {
    const Node& n = nodes[idx];
    switch (n.op) {
        case Op::Number: return format_number(n.value);
        case Op::Var: return "x";
        case Op::Neg: return "(-" + print(nodes, n.lhs) + ")";
        case Op::Add: return "(" + print(nodes, n.lhs) + " + " + print(nodes, n.rhs) + ")";
        case Op::Sub: return "(" + print(nodes, n.lhs) + " - " + print(nodes, n.rhs) + ")";
        case Op::Mul: return "(" + print(nodes, n.lhs) + " * " + print(nodes, n.rhs) + ")";
        case Op::Div: return "(" + print(nodes, n.lhs) + " / " + print(nodes, n.rhs) + ")";
        case Op::Pow: return "(" + print(nodes, n.lhs) + " ^ " + print(nodes, n.rhs) + ")";
        default: return std::string(func_name(n.op)) + "(" + print(nodes, n.lhs) + ")";
    }
}

bool same(const std::vector<Node>& a, int ia, const std::vector<Node>& b, int ib) {
    if (ia < 0 || ib < 0) return ia == ib;
    const Node& x = a[ia];
    const Node& y = b[ib];
    if (x.op != y.op) return false;
    if (x.op == Op::Number && x.value != y.value) return false;
    return same(a, x.lhs, b, y.lhs) && same(a, x.rhs, b, y.rhs);
}

}  // namespace

FunctionExpr parse_expr(std::string_view text) {
    FunctionExpr out;
    out.source_ = std::string(text);
    Parser p(text, out.nodes_);
    out.root_ = p.parse();

    std::vector<Node> order;
    flatten(out.nodes_, out.root_, order);
    std::size_t depth = 0;
    for (const Node& n : order) {
        if (n.op == Op::Number || n.op == Op::Var) {
            ++depth;
        } else if (n.op == Op::Add || n.op == Op::Sub || n.op == Op::Mul || n.op == Op::Div ||
                   n.op == Op::Pow) {
            --depth;
        }
        out.max_depth_ = std::max(out.max_depth_, depth);
    }
    if (out.max_depth_ > kMaxDepth) throw ParseError("expression too large", 0);
    out.program_.reserve(order.size());
    for (const Node& n : order) {
        out.program_.push_back({n.op, n.value, static_cast<std::uint32_t>(n.offset)});
    }
    return out;
}

double FunctionExpr::eval(double x) const {
    std::array<double, kMaxDepth + 1> stack;
    std::size_t top = 0;
    for (const Instr& in : program_) {
        const std::size_t at = in.node;
        switch (in.op) {
            case Op::Number: stack[top++] = in.value; break;
            case Op::Var: stack[top++] = x; break;
            case Op::Neg: stack[top - 1] = -stack[top - 1]; break;
            case Op::Exp: stack[top - 1] = std::exp(stack[top - 1]); break;
            case Op::Sin: stack[top - 1] = std::sin(stack[top - 1]); break;
            case Op::Cos: stack[top - 1] = std::cos(stack[top - 1]); break;
            case Op::Log:
                if (!(stack[top - 1] > 0.0)) throw EvalError("log of non-positive value", at);
                stack[top - 1] = std::log(stack[top - 1]);
                break;
            case Op::Sqrt:
                if (stack[top - 1] < 0.0) throw EvalError("sqrt of negative value", at);
                stack[top - 1] = std::sqrt(stack[top - 1]);
                break;
            default: {
                const double r = stack[--top];
                double& l = stack[top - 1];
                switch (in.op) {
                    case Op::Add: l += r; break;
                    case Op::Sub: l -= r; break;
                    case Op::Mul: l *= r; break;
                    case Op::Div:
                        if (r == 0.0) throw EvalError("division by zero", at);
                        l /= r;
                        break;
                    case Op::Pow: {
                        const double v = std::pow(l, r);
                        if (std::isnan(v) && !std::isnan(l) && !std::isnan(r)) {
                            throw EvalError("power of negative base with non-integer exponent", at);
                        }
                        if (l == 0.0 && r < 0.0) throw EvalError("zero raised to a negative power", at);
                        l = v;
                        break;
                    }
                    default: break;
                }
            }
        }
    }
    return stack[0];
}

std::string FunctionExpr::to_string() const {
    if (root_ < 0) return "";
    return print(nodes_, root_);
}

bool FunctionExpr::same_tree(const FunctionExpr& other) const {
    return same(nodes_, root_, other.nodes_, other.root_);
}

}  // namespace weber_orr
