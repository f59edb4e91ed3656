#include "bispec/dsl.hpp"

#include <cctype>
#include <sstream>
#include <variant>

namespace bispec {

namespace {

enum class Tok {
    ident, number, plus, minus, star, slash, caret,
    lparen, rparen, lbracket, rbracket, comma, semicolon, eq, end
};

struct Token {
    Tok kind;
    std::string text;
    int line = 1, col = 1;
};

class Lexer {
  public:
    explicit Lexer(const std::string& text) : s_(text) {}

    std::vector<Token> run() {
        std::vector<Token> out;
        while (true) {
            skip_ws_();
            Token t;
            t.line = line_;
            t.col = col_;
            if (pos_ >= s_.size()) {
                t.kind = Tok::end;
                out.push_back(t);
                return out;
            }
            const char c = s_[pos_];
            if (std::isdigit(static_cast<unsigned char>(c))) {
                t.kind = Tok::number;
                while (pos_ < s_.size() &&
                       std::isdigit(static_cast<unsigned char>(s_[pos_])))
                    t.text += advance_();
            } else if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
                t.kind = Tok::ident;
                while (pos_ < s_.size() &&
                       (std::isalnum(static_cast<unsigned char>(s_[pos_])) ||
                        s_[pos_] == '_'))
                    t.text += advance_();
            } else {
                switch (c) {
                    case '+': t.kind = Tok::plus; break;
                    case '-': t.kind = Tok::minus; break;
                    case '*': t.kind = Tok::star; break;
                    case '/': t.kind = Tok::slash; break;
                    case '^': t.kind = Tok::caret; break;
                    case '(': t.kind = Tok::lparen; break;
                    case ')': t.kind = Tok::rparen; break;
                    case '[': t.kind = Tok::lbracket; break;
                    case ']': t.kind = Tok::rbracket; break;
                    case ',': t.kind = Tok::comma; break;
                    case ';': t.kind = Tok::semicolon; break;
                    case '=': t.kind = Tok::eq; break;
                    default:
                        throw SyntaxError(std::string("unexpected character '") +
                                          c + "'", line_, col_);
                }
                t.text = advance_();
            }
            out.push_back(std::move(t));
        }
    }

  private:
    char advance_() {
        char c = s_[pos_++];
        if (c == '\n') {
            ++line_;
            col_ = 1;
        } else {
            ++col_;
        }
        return c;
    }
    void skip_ws_() {
        while (pos_ < s_.size()) {
            const char c = s_[pos_];
            if (c == '#') {
                while (pos_ < s_.size() && s_[pos_] != '\n') advance_();
            } else if (std::isspace(static_cast<unsigned char>(c))) {
                advance_();
            } else {
                return;
            }
        }
    }
    const std::string& s_;
    std::size_t pos_ = 0;
    int line_ = 1, col_ = 1;
};

// Expression values: scalars, matrices, operators; scalar and matrix
// values may carry an e^{xz} factor.
struct Value {
    std::variant<RatFunc, MatRF, DiffOp> v;
    bool kernel = false;

    bool is_scalar() const { return std::holds_alternative<RatFunc>(v); }
    bool is_matrix() const { return std::holds_alternative<MatRF>(v); }
    bool is_op() const { return std::holds_alternative<DiffOp>(v); }
    const RatFunc& f() const { return std::get<RatFunc>(v); }
    const MatRF& m() const { return std::get<MatRF>(v); }
    const DiffOp& op() const { return std::get<DiffOp>(v); }
};

DiffOp promote_op(const DiffOp& op, int n) {
    if (op.size() == n) return op;
    if (op.size() != 1)
        throw DimensionError("operator size mismatch");
    DiffOp out(op.side(), n);
    for (const auto& [o, m] : op.coeffs())
        out.set_coeff(o, MatRF::scalar(n, m.at(0, 0)));
    return out;
}

DiffOp embed_order0(const Value& val, Side side, int n) {
    if (val.kernel)
        throw DomainError("expxz cannot appear inside an operator expression");
    MatRF m = val.is_scalar() ? MatRF::scalar(n, val.f()) : val.m();
    if (m.rows() != n || m.cols() != n)
        throw DimensionError("operator coefficient size mismatch");
    return DiffOp::order0(side, m);
}

void check_kernel_combine(const Value& a, const Value& b, const char* what) {
    if (a.kernel && b.kernel)
        throw DomainError(std::string("cannot ") + what +
                          " two expxz factors (e^{2xz} is outside the class)");
}

Value neg(Value a) {
    if (a.is_scalar()) return {-a.f(), a.kernel};
    if (a.is_matrix()) return {-a.m(), a.kernel};
    return {-a.op(), false};
}

Value add(const Value& a, const Value& b, bool subtract) {
    Value bb = subtract ? neg(b) : b;
    if (a.kernel != bb.kernel)
        throw DomainError("cannot add an expxz term to a plain term");
    if (a.is_op() || bb.is_op()) {
        if (a.is_op() && bb.is_op()) {
            DiffOp x = a.op(), y = bb.op();
            if (x.side() != y.side())
                throw DomainError("cannot mix Dx and Dz operators");
            const int n = std::max(x.size(), y.size());
            return {promote_op(x, n) + promote_op(y, n), false};
        }
        const Value& opv = a.is_op() ? a : bb;
        const Value& other = a.is_op() ? bb : a;
        int n = opv.op().size();
        if (other.is_matrix()) n = std::max(n, other.m().rows());
        DiffOp x = promote_op(opv.op(), n);
        return {x + embed_order0(other, x.side(), n), false};
    }
    if (a.is_matrix() || bb.is_matrix()) {
        if (!a.is_matrix() || !bb.is_matrix())
            throw DimensionError("cannot add a scalar to a matrix");
        return {a.m() + bb.m(), a.kernel};
    }
    return {a.f() + bb.f(), a.kernel};
}

Value mul(const Value& a, const Value& b) {
    check_kernel_combine(a, b, "multiply");
    const bool kernel = a.kernel || b.kernel;
    if (a.is_op() || b.is_op()) {
        if (kernel)
            throw DomainError("expxz cannot appear inside an operator expression");
        if (a.is_op() && b.is_op()) {
            DiffOp x = a.op(), y = b.op();
            if (x.side() != y.side())
                throw DomainError("cannot mix Dx and Dz operators");
            const int n = std::max(x.size(), y.size());
            x = promote_op(x, n);
            y = promote_op(y, n);
            return {x.side() == Side::left ? compose_left(x, y)
                                           : compose_right(x, y), false};
        }
        const bool op_first = a.is_op();
        const Value& opv = op_first ? a : b;
        const Value& other = op_first ? b : a;
        int n = opv.op().size();
        if (other.is_matrix()) n = std::max(n, other.m().rows());
        DiffOp x = promote_op(opv.op(), n);
        DiffOp y = embed_order0(other, x.side(), n);
        if (!op_first) std::swap(x, y);
        return {x.side() == Side::left ? compose_left(x, y)
                                       : compose_right(x, y), false};
    }
    if (a.is_matrix() && b.is_matrix()) return {a.m() * b.m(), kernel};
    if (a.is_matrix()) return {a.m().scale(b.f()), kernel};
    if (b.is_matrix()) return {b.m().scale(a.f()), kernel};
    return {a.f() * b.f(), kernel};
}

Value div(const Value& a, const Value& b) {
    if (b.kernel) throw DomainError("cannot divide by an expxz term");
    if (!b.is_scalar())
        throw DomainError("division requires a scalar divisor");
    if (b.f().is_zero()) throw DomainError("division by zero");
    const RatFunc inv = b.f().inverse();
    if (a.is_scalar()) return {a.f() * inv, a.kernel};
    if (a.is_matrix()) return {a.m().scale(inv), a.kernel};
    return {a.op().scale(inv), false};
}

Value pow_value(const Value& a, long e) {
    if (a.kernel) throw DomainError("cannot exponentiate an expxz term");
    if (a.is_scalar()) return {a.f().pow(static_cast<int>(e)), false};
    if (a.is_matrix()) {
        if (e < 0) throw DomainError("negative matrix powers are not supported");
        return {a.m().pow(static_cast<unsigned>(e)), false};
    }
    if (e < 0) throw DomainError("negative operator powers are not supported");
    DiffOp r = DiffOp::identity(a.op().side(), a.op().size());
    for (long i = 0; i < e; ++i)
        r = a.op().side() == Side::left ? compose_left(r, a.op())
                                        : compose_right(r, a.op());
    return {r, false};
}

class Parser {
  public:
    Parser(std::vector<Token> toks, FieldPtr field)
        : toks_(std::move(toks)), field_(std::move(field)) {}

    ProblemFile parse_file() {
        ProblemFile pf;
        pf.field = field_;
        while (peek().kind != Tok::end) {
            const Token kw = expect(Tok::ident, "declaration keyword");
            if (kw.text == "field") {
                if (!pf.order.empty() || pf.field_declared)
                    throw SyntaxError("field must be declared first and once",
                                      kw.line, kw.col);
                parse_field_(pf);
            } else if (kw.text == "let" || kw.text == "mat" ||
                       kw.text == "op" || kw.text == "fun") {
                parse_binding_(pf, kw);
            } else {
                throw SyntaxError("unknown declaration '" + kw.text + "'",
                                  kw.line, kw.col);
            }
        }
        return pf;
    }

    Value parse_single_expression() {
        Value v = expr_();
        if (peek().kind != Tok::end)
            throw SyntaxError("trailing input after expression",
                              peek().line, peek().col);
        return v;
    }

  private:
    const Token& peek() const { return toks_[pos_]; }
    Token advance() { return toks_[pos_++]; }
    bool accept(Tok k) {
        if (peek().kind == k) {
            ++pos_;
            return true;
        }
        return false;
    }
    Token expect(Tok k, const std::string& what) {
        if (peek().kind != k)
            throw SyntaxError("expected " + what, peek().line, peek().col);
        return advance();
    }

    void parse_field_(ProblemFile& pf) {
        const Token name = expect(Tok::ident, "field name");
        if (name.text != "Q")
            throw SyntaxError("only Q and Q[a]/(m) fields are supported",
                              name.line, name.col);
        pf.field_declared = true;
        if (accept(Tok::semicolon)) return;
        expect(Tok::lbracket, "'[' in field declaration");
        const Token gen = expect(Tok::ident, "field generator name");
        expect(Tok::rbracket, "']' in field declaration");
        expect(Tok::slash, "'/' in field declaration");
        expect(Tok::lparen, "'(' before modulus");
        // The modulus is parsed as a polynomial with the generator standing
        // in for x.
        gen_as_x_ = gen.text;
        Value m = expr_();
        gen_as_x_.clear();
        expect(Tok::rparen, "')' after modulus");
        expect(Tok::semicolon, "';' after field declaration");
        if (!m.is_scalar() || m.kernel || !m.f().is_polynomial() ||
            m.f().num().degree(Var::z) > 0)
            throw SyntaxError("modulus must be a polynomial in the generator",
                              gen.line, gen.col);
        const BiPoly& poly = m.f().num();
        const int d = poly.degree(Var::x);
        if (d < 1)
            throw SyntaxError("modulus must have degree >= 1", gen.line, gen.col);
        std::vector<Rat> coeffs(d + 1);
        for (int i = 0; i <= d; ++i) {
            Scalar c = poly.coeff(Mono{i, 0});
            coeffs[i] = c.is_rational() ? c.rat() : throw SyntaxError(
                "modulus coefficients must be rational", gen.line, gen.col);
        }
        const Rat lead = coeffs[d];
        for (auto& c : coeffs) c /= lead;
        field_ = std::make_shared<NumberField>(std::move(coeffs), gen.text);
        pf.field = field_;
    }

    void parse_binding_(ProblemFile& pf, const Token& kw) {
        const Token name = expect(Tok::ident, "binding name");
        if (name.text == "x" || name.text == "z" || name.text == "Dx" ||
            name.text == "Dz" || name.text == "expxz" ||
            (field_ && name.text == field_->generator_name()))
            throw SyntaxError("'" + name.text + "' is reserved",
                              name.line, name.col);
        if (pf.has(name.text))
            throw SyntaxError("name '" + name.text + "' already defined",
                              name.line, name.col);
        expect(Tok::eq, "'='");
        env_ = &pf;
        Value v = expr_();
        env_ = nullptr;
        expect(Tok::semicolon, "';' after declaration");

        if (kw.text == "let") {
            if (!v.is_scalar() || v.kernel)
                throw SyntaxError("let binds a scalar function",
                                  name.line, name.col);
            pf.lets.emplace(name.text, v.f());
            pf.order.push_back({ProblemFile::Kind::let_k, name.text});
        } else if (kw.text == "mat") {
            if (v.kernel)
                throw SyntaxError("mat cannot bind an expxz term",
                                  name.line, name.col);
            MatRF m = v.is_scalar() ? MatRF::scalar(1, v.f())
                      : v.is_matrix() ? v.m()
                      : throw SyntaxError("mat binds a matrix", name.line,
                                          name.col);
            pf.mats.emplace(name.text, std::move(m));
            pf.order.push_back({ProblemFile::Kind::mat_k, name.text});
        } else if (kw.text == "op") {
            if (!v.is_op())
                throw SyntaxError(
                    "op needs a Dx/Dz expression; use mat for plain matrices",
                    name.line, name.col);
            pf.ops.emplace(name.text, v.op());
            pf.order.push_back({ProblemFile::Kind::op_k, name.text});
        } else {  // fun
            if (!v.kernel)
                throw SyntaxError("fun binds an expxz * M expression",
                                  name.line, name.col);
            MatRF m = v.is_scalar() ? MatRF::scalar(1, v.f()) : v.m();
            pf.funs.emplace(name.text, ExpKernel(std::move(m)));
            pf.order.push_back({ProblemFile::Kind::fun_k, name.text});
        }
    }

    Value expr_() {
        Value v = term_();
        while (true) {
            if (accept(Tok::plus))
                v = add(v, term_(), false);
            else if (peek().kind == Tok::minus) {
                advance();
                v = add(v, term_(), true);
            } else {
                return v;
            }
        }
    }

    Value term_() {
        Value v = unary_();
        while (true) {
            if (accept(Tok::star))
                v = mul(v, unary_());
            else if (accept(Tok::slash))
                v = div(v, unary_());
            else
                return v;
        }
    }

    Value unary_() {
        if (accept(Tok::minus)) return neg(unary_());
        return power_();
    }

    Value power_() {
        Value v = primary_();
        if (!accept(Tok::caret)) return v;
        bool negexp = accept(Tok::minus);
        const Token n = expect(Tok::number, "integer exponent");
        long e = std::stol(n.text);
        return pow_value(v, negexp ? -e : e);
    }

    Value primary_() {
        const Token t = peek();
        if (t.kind == Tok::number) {
            advance();
            return {RatFunc(Scalar(Rat(t.text))), false};
        }
        if (t.kind == Tok::lparen) {
            advance();
            Value v = expr_();
            expect(Tok::rparen, "')'");
            return v;
        }
        if (t.kind == Tok::lbracket) return matrix_();
        if (t.kind == Tok::ident) {
            advance();
            return name_(t);
        }
        throw SyntaxError("expected an expression", t.line, t.col);
    }

    Value matrix_() {
        const Token open = expect(Tok::lbracket, "'['");
        std::vector<std::vector<RatFunc>> rows;
        do {
            expect(Tok::lbracket, "'[' starting a matrix row");
            std::vector<RatFunc> row;
            do {
                Value e = expr_();
                if (!e.is_scalar() || e.kernel)
                    throw SyntaxError("matrix entries must be scalar functions",
                                      peek().line, peek().col);
                row.push_back(e.f());
            } while (accept(Tok::comma));
            expect(Tok::rbracket, "']' ending a matrix row");
            if (!rows.empty() && rows.front().size() != row.size())
                throw DimensionError("matrix rows have differing lengths");
            rows.push_back(std::move(row));
        } while (accept(Tok::comma));
        expect(Tok::rbracket, "']' ending the matrix");
        MatRF m(static_cast<int>(rows.size()),
                static_cast<int>(rows.front().size()));
        for (std::size_t r = 0; r < rows.size(); ++r)
            for (std::size_t c = 0; c < rows[r].size(); ++c)
                m.at(static_cast<int>(r), static_cast<int>(c)) = rows[r][c];
        (void)open;
        return {std::move(m), false};
    }

    Value name_(const Token& t) {
        const std::string& id = t.text;
        if (!gen_as_x_.empty()) {
            if (id == gen_as_x_) return {RatFunc::var(Var::x), false};
            throw SyntaxError("only the generator may appear in a modulus",
                              t.line, t.col);
        }
        if (id == "x") return {RatFunc::var(Var::x), false};
        if (id == "z") return {RatFunc::var(Var::z), false};
        if (id == "Dx") return {DiffOp::derivative(Side::left, 1), false};
        if (id == "Dz") return {DiffOp::derivative(Side::right, 1), false};
        if (id == "expxz") return {RatFunc(Scalar::one()), true};
        if (field_ && id == field_->generator_name())
            return {RatFunc(BiPoly(Scalar::generator(field_))), false};
        if (env_) {
            if (auto it = env_->lets.find(id); it != env_->lets.end())
                return {it->second, false};
            if (auto it = env_->mats.find(id); it != env_->mats.end())
                return {it->second, false};
            if (auto it = env_->ops.find(id); it != env_->ops.end())
                return {it->second, false};
            if (auto it = env_->funs.find(id); it != env_->funs.end())
                return {it->second.m(), true};
        }
        throw UndefinedNameError("undefined name '" + id + "' (line " +
                                 std::to_string(t.line) + ", column " +
                                 std::to_string(t.col) + ")");
    }

    std::vector<Token> toks_;
    std::size_t pos_ = 0;
    FieldPtr field_;
    ProblemFile* env_ = nullptr;
    std::string gen_as_x_;
};

std::string modulus_string(const NumberField& f) {
    // Render c0 + c1 a + ... + a^d in descending powers.
    BiPoly p;
    const auto& m = f.modulus();
    for (std::size_t i = 0; i < m.size(); ++i)
        if (m[i] != 0)
            p = p + BiPoly::monomial(Mono{static_cast<int>(i), 0},
                                     Scalar(m[i]));
    std::string s = p.to_string();
    // The printer names the variable x; swap in the generator.
    std::string out;
    for (char c : s) {
        if (c == 'x')
            out += f.generator_name();
        else
            out += c;
    }
    return out;
}

}  // namespace

bool ProblemFile::has(const std::string& name) const {
    return lets.count(name) || mats.count(name) || ops.count(name) ||
           funs.count(name);
}

std::string ProblemFile::print() const {
    std::ostringstream os;
    if (field_declared) {
        if (field)
            os << "field Q[" << field->generator_name() << "]/("
               << modulus_string(*field) << ");\n";
        else
            os << "field Q;\n";
    }
    for (const auto& b : order) {
        switch (b.kind) {
            case Kind::let_k:
                os << "let " << b.name << " = " << lets.at(b.name).to_string()
                   << ";\n";
                break;
            case Kind::mat_k:
                os << "mat " << b.name << " = " << mats.at(b.name).to_string()
                   << ";\n";
                break;
            case Kind::op_k: {
                const DiffOp& op = ops.at(b.name);
                os << "op " << b.name << " = ";
                if (op.order() == 0) {
                    // Keep an explicit derivative token so the line parses
                    // back as an operator.
                    if (op.side() == Side::left)
                        os << op.coeff(0).to_string() << "*Dx^0";
                    else
                        os << "Dz^0*" << op.coeff(0).to_string();
                } else {
                    os << op.to_string();
                }
                os << ";\n";
                break;
            }
            case Kind::fun_k:
                os << "fun " << b.name << " = "
                   << funs.at(b.name).to_string() << ";\n";
                break;
        }
    }
    return os.str();
}

bool ProblemFile::operator==(const ProblemFile& o) const {
    if (field_declared != o.field_declared) return false;
    if ((field == nullptr) != (o.field == nullptr)) return false;
    if (field && !field->same_modulus(*o.field)) return false;
    if (order.size() != o.order.size()) return false;
    for (std::size_t i = 0; i < order.size(); ++i)
        if (order[i].kind != o.order[i].kind ||
            order[i].name != o.order[i].name)
            return false;
    return lets == o.lets && mats == o.mats && ops == o.ops && funs == o.funs;
}

ProblemFile parse_problem(const std::string& text) {
    Lexer lex(text);
    Parser p(lex.run(), nullptr);
    return p.parse_file();
}

RatFunc parse_ratfunc(const std::string& text, const FieldPtr& field) {
    Lexer lex(text);
    Parser p(lex.run(), field);
    Value v = p.parse_single_expression();
    if (!v.is_scalar() || v.kernel)
        throw DomainError("expected a scalar expression: " + text);
    return v.f();
}

std::vector<std::pair<Scalar, int>> parse_pole_spec(const std::string& text,
                                                    const FieldPtr& field) {
    std::vector<std::pair<Scalar, int>> out;
    std::size_t start = 0;
    while (start <= text.size()) {
        std::size_t comma = text.find(',', start);
        std::string item = text.substr(
            start, comma == std::string::npos ? std::string::npos
                                              : comma - start);
        std::size_t colon = item.rfind(':');
        if (colon == std::string::npos)
            throw DomainError("pole spec items must look like p:nu");
        RatFunc p = parse_ratfunc(item.substr(0, colon), field);
        if (!p.is_constant())
            throw DomainError("pole locations must be constants");
        int nu = std::stoi(item.substr(colon + 1));
        out.emplace_back(p.constant_value(), nu);
        if (comma == std::string::npos) break;
        start = comma + 1;
    }
    return out;
}

FieldPtr parse_field_modulus(const std::string& text,
                             const std::string& generator) {
    std::string decl = "field Q[" + generator + "]/(" + text + ");";
    ProblemFile pf = parse_problem(decl);
    return pf.field;
}

}  // namespace bispec
