#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "canonform/form.hpp"
#include "canonform/matrix.hpp"

namespace canonform {

struct Expr;
using ExprPtr = std::shared_ptr<const Expr>;

/// Expression tree for a polynomial map F(t; x), linear in each leaf parameter.
struct Expr {
    enum class Kind { Parameter, FixedForm, Sum, Product, Power, ScalarMultiple };

    Kind kind = Kind::FixedForm;
    int n = 1;
    int d = 0;
    int param = -1;      // Parameter
    Form form;           // Parameter weight or FixedForm value
    int exponent = 1;    // Power
    Scalar scalar = 1;   // ScalarMultiple
    std::vector<ExprPtr> kids;

    /// t_j * weight
    static ExprPtr parameter(int j, const Form& weight);
    static ExprPtr fixed(const Form& f);
    static ExprPtr sum(const std::vector<ExprPtr>& terms, int n, int d);
    static ExprPtr product(const ExprPtr& a, const ExprPtr& b);
    static ExprPtr power(const ExprPtr& a, int k);
    static ExprPtr scaled(const Scalar& c, const ExprPtr& a);
};

/// Value and all parameter partials of a subexpression at one point.
struct Jet {
    Form value;
    std::map<int, Form> grad;
};

struct ParamMap {
    std::string name;
    int n = 1;
    int d = 0;
    int M = 0;
    ExprPtr expr;
    std::vector<std::string> param_names;
    /// Special points from the non-constructive proofs, tried before random sampling.
    std::vector<std::vector<Scalar>> witnesses;
    /// False for maps that deliberately carry more parameters than N(n,d).
    bool canonical_by_design = true;

    Form evaluate(const std::vector<Scalar>& t) const;
    Jet jet(const std::vector<Scalar>& u) const;
    /// dF/dt_j at u, j = 0..M-1.
    std::vector<Form> partials(const std::vector<Scalar>& u) const;
    /// M x N(n,d) matrix of normalized coefficients of the partials.
    Matrix jacobian(const std::vector<Scalar>& u) const;
};

/// Shape parameters for catalog entries, as key/value text (n=3, e=3,2, c=1,0,i,0, ...).
using MapParams = std::map<std::string, std::string>;

std::vector<std::string> catalog_names();
ParamMap build_map(const std::string& name, const MapParams& params = {});

enum class Verdict { Certified, NotFullRankAtWitness, ExceptionalStructure };
const char* verdict_name(Verdict v);

struct CertifyReport {
    std::vector<Scalar> witness;
    int rank = 0;
    int target = 0;
    Verdict verdict = Verdict::NotFullRankAtWitness;
    std::uint64_t seed = 0;
    int trials = 0;
};

CertifyReport jacobian_certify(const ParamMap& map, const std::optional<std::vector<Scalar>>& witness = std::nullopt,
                               int trials = 20, std::uint64_t seed = 1);

/// Dimension of the space of forms apolar to every partial at u.
int apolar_kernel_dimension(const ParamMap& map, const std::vector<Scalar>& u);

struct HyperplaneResult {
    bool exceptional = false;
    /// c3 = epsilon c1 and c4 = epsilon c2 (exceptional case).
    Scalar epsilon;
    /// Common zero of every feasible (t1 x + t2 y)^2 + (t3 x + t4 y)^2 (exceptional case).
    std::vector<Scalar> zero_point;
    /// Feasible t in C^4 with full-rank Jacobian (canonical case).
    std::vector<Scalar> witness;
};

HyperplaneResult hyperplane_classify(const std::vector<Scalar>& c, std::uint64_t seed = 1, int trials = 20);

CertifyReport zerosum_verify(int s, int trials = 20, std::uint64_t seed = 1);

}  // namespace canonform
