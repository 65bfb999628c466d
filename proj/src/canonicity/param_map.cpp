#include "canonform/canonicity.hpp"
#include "canonform/error.hpp"

namespace canonform {

ExprPtr Expr::parameter(int j, const Form& weight) {
    auto e = std::make_shared<Expr>();
    e->kind = Kind::Parameter;
    e->param = j;
    e->form = weight;
    e->n = weight.n();
    e->d = weight.d();
    return e;
}

ExprPtr Expr::fixed(const Form& f) {
    auto e = std::make_shared<Expr>();
    e->kind = Kind::FixedForm;
    e->form = f;
    e->n = f.n();
    e->d = f.d();
    return e;
}

ExprPtr Expr::sum(const std::vector<ExprPtr>& terms, int n, int d) {
    for (const auto& t : terms)
        if (t->n != n || t->d != d) throw Error(ErrorKind::ShapeMismatch, "sum of expressions with different shapes");
    auto e = std::make_shared<Expr>();
    e->kind = Kind::Sum;
    e->kids = terms;
    e->n = n;
    e->d = d;
    return e;
}

ExprPtr Expr::product(const ExprPtr& a, const ExprPtr& b) {
    if (a->n != b->n) throw Error(ErrorKind::ShapeMismatch, "product of expressions in different variables");
    auto e = std::make_shared<Expr>();
    e->kind = Kind::Product;
    e->kids = {a, b};
    e->n = a->n;
    e->d = a->d + b->d;
    return e;
}

ExprPtr Expr::power(const ExprPtr& a, int k) {
    if (k < 1) throw Error(ErrorKind::BadShape, "power exponent must be positive");
    auto e = std::make_shared<Expr>();
    e->kind = Kind::Power;
    e->kids = {a};
    e->exponent = k;
    e->n = a->n;
    e->d = a->d * k;
    return e;
}

ExprPtr Expr::scaled(const Scalar& c, const ExprPtr& a) {
    auto e = std::make_shared<Expr>();
    e->kind = Kind::ScalarMultiple;
    e->kids = {a};
    e->scalar = c;
    e->n = a->n;
    e->d = a->d;
    return e;
}

namespace {

Form eval_expr(const Expr& e, const std::vector<Scalar>& t) {
    switch (e.kind) {
        case Expr::Kind::Parameter: return e.form * t.at(e.param);
        case Expr::Kind::FixedForm: return e.form;
        case Expr::Kind::Sum: {
            Form s(e.n, e.d);
            for (const auto& k : e.kids) s += eval_expr(*k, t);
            return s;
        }
        case Expr::Kind::Product: return eval_expr(*e.kids[0], t) * eval_expr(*e.kids[1], t);
        case Expr::Kind::Power: return eval_expr(*e.kids[0], t).pow(e.exponent);
        case Expr::Kind::ScalarMultiple: return eval_expr(*e.kids[0], t) * e.scalar;
    }
    return Form(e.n, e.d);
}

void add_grad(std::map<int, Form>& g, int j, const Form& f) {
    auto it = g.find(j);
    if (it == g.end())
        g.emplace(j, f);
    else
        it->second += f;
}

Jet jet_expr(const Expr& e, const std::vector<Scalar>& u) {
    Jet J;
    switch (e.kind) {
        case Expr::Kind::Parameter:
            J.value = e.form * u.at(e.param);
            J.grad.emplace(e.param, e.form);
            break;
        case Expr::Kind::FixedForm: J.value = e.form; break;
        case Expr::Kind::Sum:
            J.value = Form(e.n, e.d);
            for (const auto& k : e.kids) {
                Jet c = jet_expr(*k, u);
                J.value += c.value;
                for (auto& [j, f] : c.grad) add_grad(J.grad, j, f);
            }
            break;
        case Expr::Kind::Product: {
            Jet a = jet_expr(*e.kids[0], u), b = jet_expr(*e.kids[1], u);
            J.value = a.value * b.value;
            for (auto& [j, f] : a.grad) add_grad(J.grad, j, f * b.value);
            for (auto& [j, f] : b.grad) add_grad(J.grad, j, a.value * f);
            break;
        }
        case Expr::Kind::Power: {
            Jet a = jet_expr(*e.kids[0], u);
            int k = e.exponent;
            Form p = k == 1 ? Form::constant(e.n, 1) : a.value.pow(k - 1);
            J.value = p * a.value;
            for (auto& [j, f] : a.grad) J.grad.emplace(j, p * f * Scalar(k));
            break;
        }
        case Expr::Kind::ScalarMultiple: {
            Jet a = jet_expr(*e.kids[0], u);
            J.value = a.value * e.scalar;
            for (auto& [j, f] : a.grad) J.grad.emplace(j, f * e.scalar);
            break;
        }
    }
    return J;
}

}  // namespace

Form ParamMap::evaluate(const std::vector<Scalar>& t) const {
    if (static_cast<int>(t.size()) != M) throw Error(ErrorKind::ShapeMismatch, "parameter point has the wrong length");
    return eval_expr(*expr, t);
}

Jet ParamMap::jet(const std::vector<Scalar>& u) const {
    if (static_cast<int>(u.size()) != M) throw Error(ErrorKind::ShapeMismatch, "parameter point has the wrong length");
    return jet_expr(*expr, u);
}

std::vector<Form> ParamMap::partials(const std::vector<Scalar>& u) const {
    Jet J = jet(u);
    std::vector<Form> out(M, Form(n, d));
    for (auto& [j, f] : J.grad) out[j] = f;
    return out;
}

Matrix ParamMap::jacobian(const std::vector<Scalar>& u) const {
    std::vector<Form> P = partials(u);
    int N = static_cast<int>(index_set(n, d).size());
    Matrix A(M, N);
    for (int j = 0; j < M; ++j) {
        std::vector<Scalar> v = P[j].to_vector();
        for (int c = 0; c < N; ++c) A(j, c) = v[c];
    }
    return A;
}

}  // namespace canonform
