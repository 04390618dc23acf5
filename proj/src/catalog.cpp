#include "gmt/catalog.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include <Eigen/Dense>

#include "gmt/matrix_io.hpp"

namespace gmt {

const char* to_string(BranchTag t) {
    switch (t) {
        case BranchTag::SinhPlusExpPlus: return "sinh+exp+";
        case BranchTag::SinhPlusExpMinus: return "sinh+exp-";
        case BranchTag::SinhMinusExpPlus: return "sinh-exp+";
        case BranchTag::SinhMinusExpMinus: return "sinh-exp-";
    }
    return "?";
}

Complex cosh_dn(int n) {
    if (n < 4) throw BadIndex("cosh_dn: need n >= 4");
    double cot = 1.0 / std::tan(M_PI / n);
    double cot2 = cot * cot;
    double radicand = 3.0 * cot2 * cot2 + 14.0 * cot2 - 5.0;
    return 0.25 * Complex{1.0 + cot2, -std::sqrt(radicand)};
}

namespace {

constexpr double kRelatorBranchTol = 1e-8;

Mat2 rho_matrix(int n, Complex eHalf) {
    double c = std::cos(M_PI / n), s = std::sin(M_PI / n);
    Complex i{0.0, 1.0};
    return {c, i * eHalf * s, i * s / eHalf, c};
}

Mat2 b_matrix(int n, Complex eHalf) {
    double c = std::cos(M_PI / n), s = std::sin(M_PI / n);
    Complex i{0.0, 1.0};
    return {c, i * s / eHalf, i * eHalf * s, c};
}

double fig8_relator_residual(const ProjectiveMatrix& rho, const ProjectiveMatrix& b) {
    Representation rep;
    rep.assignment.emplace("rho", rho);
    rep.assignment.emplace("b", b);
    return projective_distance(evaluate_word(rep, figure_eight_relator()),
                               ProjectiveMatrix::identity());
}

}  // namespace

FigureEightData figure_eight_generators(int n, const Tolerance& tol) {
    Complex ch = cosh_dn(n);
    Complex sinhPos = std::sqrt(ch * ch - Complex{1.0});

    struct Candidate {
        Complex eHalf;
        BranchTag tag;
    };
    Complex ePlus = std::sqrt(ch + sinhPos);
    Complex eMinus = std::sqrt(ch - sinhPos);
    Candidate candidates[4] = {
        {ePlus, BranchTag::SinhPlusExpPlus},
        {-ePlus, BranchTag::SinhPlusExpMinus},
        {eMinus, BranchTag::SinhMinusExpPlus},
        {-eMinus, BranchTag::SinhMinusExpMinus},
    };

    std::vector<FigureEightData> passing;
    for (const Candidate& cand : candidates) {
        FigureEightData data;
        data.n = n;
        data.coshDn = ch;
        data.dnHalfExp = cand.eHalf;
        data.branchTag = cand.tag;
        data.rho = normalize_det(rho_matrix(n, cand.eHalf), tol);
        data.b = normalize_det(b_matrix(n, cand.eHalf), tol);
        if (fig8_relator_residual(data.rho, data.b) <= kRelatorBranchTol)
            passing.push_back(data);
    }
    if (passing.empty())
        throw NoBranchSatisfiesRelation("figure_eight_generators: no branch of e^(d_n/2) satisfies "
                                        "the defining relator");

    auto preferred = [](const FigureEightData& d) {
        int score = 0;
        if (d.dnHalfExp.imag() >= 0.0) score += 2;
        if (d.dnHalfExp.imag() >= 0.0 && d.dnHalfExp.real() >= 0.0) score += 1;
        return score;
    };
    const FigureEightData* best = &passing.front();
    for (const FigureEightData& d : passing)
        if (preferred(d) > preferred(*best)) best = &d;

    // construction sanity: the pair must realize the closed-form bound
    Complex trSq = tr_squared(best->rho);
    Complex trC = tr_commutator(best->rho, best->b);
    double value = std::abs(trSq - Complex{2.0}) + std::abs(trC - Complex{1.0});
    if (std::abs(value - gamma_gmt_upper_bound(n)) > kRelatorBranchTol)
        throw NoBranchSatisfiesRelation(
            "figure_eight_generators: selected branch misses 3 - 4sin^2(pi/n)");
    return *best;
}

double lambda_trace_distance(int n, double lambda) {
    if (n < 4) throw BadIndex("lambda_trace_distance: need n >= 4");
    double s = std::sin(M_PI / n);
    double radicand = (lambda * lambda - 3.0 * lambda + 3.0) + 4.0 * (lambda - 1.0) * s * s;
    if (radicand < 0.0) {
        std::ostringstream os;
        os << "lambda_trace_distance: negative radicand " << radicand << " at lambda=" << lambda;
        throw NegativeRadicand(os.str());
    }
    return std::sqrt(radicand);
}

double gamma_gmt_upper_bound(int n) {
    if (n < 4) throw BadIndex("gamma_gmt_upper_bound: need n >= 4");
    double s = std::sin(M_PI / n);
    return 3.0 - 4.0 * s * s;
}

ProjectiveMatrix involution_h1() {
    Complex i{0.0, 1.0};
    return normalize_det({0.0, i, i, 0.0});
}

namespace {

struct NullSpaceProbe {
    int dim = 0;
    Eigen::Vector4cd vector;
};

// h g = s·target h for a fixed choice of signs s: 4 equations per constraint
// in vec(h) = (h11, h12, h21, h22).
NullSpaceProbe probe_null_space(const std::vector<ConjugationConstraint>& constraints,
                                unsigned signBits) {
    Eigen::MatrixXcd A(4 * constraints.size(), 4);
    A.setZero();
    Eigen::Index row = 0;
    for (std::size_t c = 0; c < constraints.size(); ++c) {
        const Mat2& G = constraints[c].g.rep();
        const Mat2& T = constraints[c].target.rep();
        double sign = (signBits >> c) & 1u ? -1.0 : 1.0;
        const Complex g[2][2] = {{G.a, G.b}, {G.c, G.d}};
        const Complex t[2][2] = {
            {sign * T.a, sign * T.b}, {sign * T.c, sign * T.d}};
        for (int i = 0; i < 2; ++i) {
            for (int j = 0; j < 2; ++j) {
                for (int k = 0; k < 2; ++k) {
                    A(row, 2 * i + k) += g[k][j];
                    A(row, 2 * k + j) -= t[i][k];
                }
                ++row;
            }
        }
    }
    Eigen::JacobiSVD<Eigen::MatrixXcd> svd(A, Eigen::ComputeFullV);
    const auto& sv = svd.singularValues();
    double threshold = 1e-10 * sv(0);  // scale-invariant rank test
    int rank = 0;
    for (Eigen::Index i = 0; i < sv.size(); ++i)
        if (sv(i) > threshold) ++rank;
    return {4 - rank, svd.matrixV().col(3)};
}

}  // namespace

ProjectiveMatrix solve_conjugator(const std::vector<ConjugationConstraint>& constraints,
                                  const Tolerance& tol) {
    if (constraints.empty())
        throw std::invalid_argument("solve_conjugator: need at least one constraint");
    if (constraints.size() > 12)
        throw std::invalid_argument("solve_conjugator: too many constraints (sign scan is 2^k)");

    // The stored target is one lift of {±target}; the linear system only has
    // a null space for the sign lifts that are actually conjugate, so every
    // combination is probed (all-plus first, then lexicographic).
    std::optional<NullSpaceProbe> solution;
    int worstDim = 0;
    for (unsigned bits = 0; bits < (1u << constraints.size()); ++bits) {
        NullSpaceProbe probe = probe_null_space(constraints, bits);
        worstDim = std::max(worstDim, probe.dim);
        if (probe.dim == 1) {
            solution = probe;
            break;
        }
    }
    if (!solution) {
        if (worstDim >= 2)
            throw AmbiguousSolution("solve_conjugator: null space dimension " +
                                        std::to_string(worstDim) + "; add constraints",
                                    worstDim);
        throw NoSolution("solve_conjugator: constraints admit only the zero matrix");
    }

    const Eigen::Vector4cd& v = solution->vector;
    Mat2 h{v(0), v(1), v(2), v(3)};
    if (std::abs(h.det()) <= tol.detTol)
        throw SingularNormalization("solve_conjugator: null vector has determinant ~ 0");
    ProjectiveMatrix result = normalize_det(h, tol);

    for (const ConjugationConstraint& con : constraints) {
        ProjectiveMatrix conj = multiply(multiply(result, con.g), inverse(result));
        if (projective_distance(conj, con.target) > tol.absolute)
            throw NoSolution("solve_conjugator: solved matrix fails constraint verification");
    }
    return result;
}

ProjectiveMatrix involution_h2(int n, const Tolerance& tol) {
    FigureEightData fe = figure_eight_generators(n, tol);
    return solve_conjugator({{fe.rho, inverse(fe.rho)}, {fe.b, inverse(fe.b)}}, tol);
}

ProjectiveMatrix involution_h3(int n, const Tolerance& tol) {
    FigureEightData fe = figure_eight_generators(n, tol);
    ProjectiveMatrix bTarget =
        multiply(multiply(fe.b, inverse(fe.rho)), inverse(fe.b));
    // b rho b^-1 rho^-1 b^-1
    ProjectiveMatrix rhoTarget = multiply(
        multiply(multiply(fe.b, fe.rho), inverse(fe.b)),
        multiply(inverse(fe.rho), inverse(fe.b)));
    return solve_conjugator({{fe.b, bTarget}, {fe.rho, rhoTarget}}, tol);
}

const char* to_string(CatalogGroup g) {
    switch (g) {
        case CatalogGroup::KnotGroup: return "knot-group";
        case CatalogGroup::Gamma: return "gamma";
        case CatalogGroup::Delta: return "delta";
        case CatalogGroup::O2: return "o2";
        case CatalogGroup::O3: return "o3";
        case CatalogGroup::O4: return "o4";
    }
    return "?";
}

std::optional<CatalogGroup> catalog_group_from_string(const std::string& s) {
    if (s == "knot" || s == "knot-group") return CatalogGroup::KnotGroup;
    if (s == "gamma") return CatalogGroup::Gamma;
    if (s == "delta" || s == "o1") return CatalogGroup::Delta;
    if (s == "o2") return CatalogGroup::O2;
    if (s == "o3") return CatalogGroup::O3;
    if (s == "o4") return CatalogGroup::O4;
    return std::nullopt;
}

bool catalog_group_needs_index(CatalogGroup g) {
    return g == CatalogGroup::Gamma || g == CatalogGroup::Delta || g == CatalogGroup::O2;
}

Word figure_eight_relator() {
    Word rho = Word::letter("rho");
    Word b = Word::letter("b");
    Word c = b * rho * b.inverse() * rho.inverse();  // [b, rho]
    return rho.inverse() * c * b.inverse() * c.inverse();
}

namespace {

int require_index(CatalogGroup g, std::optional<int> n) {
    if (!n) throw BadIndex(std::string("presentation of ") + to_string(g) + " needs n");
    if (*n < 4) throw BadIndex(std::string("presentation of ") + to_string(g) + ": need n >= 4");
    return *n;
}

}  // namespace

Presentation build_presentation(CatalogGroup name, std::optional<int> n) {
    Word rho = Word::letter("rho");
    Word b = Word::letter("b");
    Presentation p;
    switch (name) {
        case CatalogGroup::KnotGroup: {
            p.name = "knot-group";
            p.generators = {"rho", "b"};
            p.relators = {figure_eight_relator()};
            break;
        }
        case CatalogGroup::Gamma: {
            int idx = require_index(name, n);
            p.name = "Gamma(" + std::to_string(idx) + ")";
            p.generators = {"rho", "b"};
            p.relators = {rho.pow(idx), b.pow(idx), figure_eight_relator()};
            break;
        }
        case CatalogGroup::Delta: {
            int idx = require_index(name, n);
            Word h1 = Word::letter("h1");
            p.name = "Delta(" + std::to_string(idx) + ")";
            p.generators = {"rho", "b", "h1"};
            p.relators = {rho.pow(idx), b.pow(idx), h1.pow(2), figure_eight_relator(),
                          h1 * rho * h1.inverse() * b.inverse()};
            break;
        }
        case CatalogGroup::O2: {
            int idx = require_index(name, n);
            Word h3 = Word::letter("h3");
            Word lhs = b * h3 * b * h3 * b.inverse() * h3 * b.inverse() * h3 * b * h3;
            Word rhs = h3 * b * h3 * b.inverse() * h3 * b.inverse() * h3 * b * h3 * b;
            p.name = "O2(" + std::to_string(idx) + ")";
            p.generators = {"b", "h3"};
            p.relators = {b.pow(idx), h3.pow(2), lhs * rhs.inverse()};
            break;
        }
        case CatalogGroup::O3: {
            Word a = Word::letter("a");
            p.name = "O3";
            p.generators = {"a", "b"};
            p.relators = {a.pow(4), b.pow(4), (a * b * a.inverse() * b.inverse()).pow(2)};
            break;
        }
        case CatalogGroup::O4: {
            Word a = Word::letter("a");
            Word q = Word::letter("p");
            Word core = a * q * a * q * a.inverse() * q * a.inverse() * q;
            p.name = "O4";
            p.generators = {"a", "p"};
            p.relators = {a.pow(4), q.pow(2), core.pow(2)};
            break;
        }
    }
    p.validate();
    return p;
}

Presentation delta_two_generator_presentation(int n) {
    if (n < 4) throw BadIndex("delta_two_generator_presentation: need n >= 4");
    Word rho = Word::letter("rho");
    Word h1 = Word::letter("h1");
    Word bImage = h1 * rho * h1.inverse();
    Presentation p;
    p.name = "Delta(" + std::to_string(n) + ")-two-generator";
    p.generators = {"rho", "h1"};
    p.relators = {rho.pow(n), h1.pow(2),
                  substitute(figure_eight_relator(), {{"b", bImage}})};
    p.validate();
    return p;
}

namespace {

Mat2 translation_family(Complex t) {
    Complex c = std::cosh(t / 2.0), s = std::sinh(t / 2.0);
    return {c, s, s, c};
}

}  // namespace

O3Data o3_representation(const Tolerance& tol) {
    Complex alpha = std::polar(1.0, M_PI / 4.0);
    ProjectiveMatrix a = normalize_det({alpha, 0.0, 0.0, std::conj(alpha)}, tol);

    auto commTraceAt = [&](Complex t) {
        ProjectiveMatrix trans = normalize_det(translation_family(t), tol);
        ProjectiveMatrix bCand = multiply(multiply(trans, a), inverse(trans));
        return tr_commutator(a, bCand);
    };

    const Complex grid[6] = {{1.0, 0.0}, {1.0, 1.0}, {2.0, 0.0},
                             {2.0, 1.0}, {1.0, 2.0}, {2.0, 2.0}};
    constexpr int kMaxIterations = 100;
    constexpr double kAccept = 1e-10;
    constexpr double kDiffStep = 1e-6;

    for (const Complex& start : grid) {
        Complex t = start;
        for (int it = 0; it < kMaxIterations; ++it) {
            Complex ft = commTraceAt(t);
            if (std::abs(ft) <= kAccept) {
                O3Data data;
                data.tunnelParameter = t;
                data.newtonStart = start;
                data.newtonIterations = it;
                ProjectiveMatrix trans = normalize_det(translation_family(t), tol);
                ProjectiveMatrix b = multiply(multiply(trans, a), inverse(trans));
                data.rep.assignment.emplace("a", a);
                data.rep.assignment.emplace("b", b);
                return data;
            }
            Complex derivative =
                (commTraceAt(t + kDiffStep) - commTraceAt(t - kDiffStep)) / (2.0 * kDiffStep);
            if (!(std::abs(derivative) > 1e-14)) break;
            Complex next = t - ft / derivative;
            if (!std::isfinite(next.real()) || !std::isfinite(next.imag())) break;
            t = next;
        }
    }
    throw RootFindFailed("o3_representation: no root of tr[a, T a T^-1] located from the start grid");
}

O4Data o4_representation(const Tolerance& tol) {
    O4Data data;
    data.o3 = o3_representation(tol);
    const ProjectiveMatrix& a = data.o3.rep.assignment.at("a");
    const ProjectiveMatrix& b = data.o3.rep.assignment.at("b");
    ProjectiveMatrix p = solve_conjugator({{a, b}, {b, a}}, tol);
    data.rep.assignment.emplace("a", a);
    data.rep.assignment.emplace("p", p);
    return data;
}

namespace {

std::string complex_note(Complex z) {
    std::ostringstream os;
    os.precision(17);
    os << z.real() << (z.imag() < 0 ? "" : "+") << z.imag() << "i";
    return os.str();
}

}  // namespace

OrbifoldGroupSpec catalog_group(CatalogGroup name, std::optional<int> n, const Tolerance& tol) {
    OrbifoldGroupSpec spec;
    spec.presentation = build_presentation(name, n);
    spec.name = spec.presentation.name;
    switch (name) {
        case CatalogGroup::KnotGroup: {
            spec.provenanceNotes = "presentation only; no matrix representation is attached";
            break;
        }
        case CatalogGroup::Gamma: {
            FigureEightData fe = figure_eight_generators(*n, tol);
            Representation rep;
            rep.assignment.emplace("rho", fe.rho);
            rep.assignment.emplace("b", fe.b);
            spec.representation = rep;
            spec.provenanceNotes = "branch " + std::string(to_string(fe.branchTag)) +
                                   ", e^(d/2) = " + complex_note(fe.dnHalfExp) +
                                   ", selected by the defining relator";
            break;
        }
        case CatalogGroup::Delta: {
            FigureEightData fe = figure_eight_generators(*n, tol);
            Representation rep;
            rep.assignment.emplace("rho", fe.rho);
            rep.assignment.emplace("b", fe.b);
            rep.assignment.emplace("h1", involution_h1());
            spec.representation = rep;
            spec.provenanceNotes = "extension of Gamma(" + std::to_string(*n) +
                                   ") by the involution h1 = (0 i; i 0)";
            break;
        }
        case CatalogGroup::O2: {
            FigureEightData fe = figure_eight_generators(*n, tol);
            Representation rep;
            rep.assignment.emplace("b", fe.b);
            rep.assignment.emplace("h3", involution_h3(*n, tol));
            spec.representation = rep;
            spec.provenanceNotes = "h3 solved from its conjugation action on (rho, b); "
                                   "rho = b^-1 h3 b^-1 h3 b";
            break;
        }
        case CatalogGroup::O3: {
            O3Data data = o3_representation(tol);
            spec.representation = data.rep;
            spec.provenanceNotes = "tunnel parameter t = " + complex_note(data.tunnelParameter) +
                                   " (Newton from t0 = " + complex_note(data.newtonStart) + ")";
            break;
        }
        case CatalogGroup::O4: {
            O4Data data = o4_representation(tol);
            spec.representation = data.rep;
            spec.provenanceNotes =
                "p solved as the involution swapping the O3 generators; O3 tunnel parameter t = " +
                complex_note(data.o3.tunnelParameter);
            break;
        }
    }
    return spec;
}

namespace {

nlohmann::json relator_report_json(const Representation& rep, const Presentation& pres,
                                   const Tolerance& tol) {
    RelatorReport report = verify_relators(rep, pres, tol);
    nlohmann::json checks = nlohmann::json::array();
    for (const RelatorCheck& c : report.checks) {
        checks.push_back({{"relator", c.relator.str()},
                          {"residual", c.residual},
                          {"bound", c.bound},
                          {"pass", c.pass}});
    }
    return {{"checks", checks}, {"pass", report.pass}, {"maxResidual", report.maxResidual}};
}

}  // namespace

nlohmann::json catalog_export(CatalogGroup name, std::optional<int> n, const Tolerance& tol) {
    OrbifoldGroupSpec spec = catalog_group(name, n, tol);
    nlohmann::json j;
    j["group"] = to_string(name);
    if (catalog_group_needs_index(name)) j["n"] = *n;
    j["name"] = spec.name;
    j["presentation"] = presentation_to_json(spec.presentation);
    j["provenanceNotes"] = spec.provenanceNotes;
    if (spec.representation) {
        nlohmann::json rep;
        for (const auto& [symbol, matrix] : spec.representation->assignment)
            rep[symbol] = matrix_to_json(matrix);
        j["representation"] = rep;
        j["relatorVerification"] = relator_report_json(*spec.representation, spec.presentation, tol);
    }
    switch (name) {
        case CatalogGroup::Gamma: {
            FigureEightData fe = figure_eight_generators(*n, tol);
            j["coshDn"] = {fe.coshDn.real(), fe.coshDn.imag()};
            j["dnHalfExp"] = {fe.dnHalfExp.real(), fe.dnHalfExp.imag()};
            j["branchTag"] = to_string(fe.branchTag);
            j["gmt"] = to_json(gmt_value(fe.rho, fe.b, tol));
            j["gmtUpperBound"] = gamma_gmt_upper_bound(*n);
            break;
        }
        case CatalogGroup::Delta: {
            j["twoGeneratorPresentation"] = presentation_to_json(delta_two_generator_presentation(*n));
            FigureEightData fe = figure_eight_generators(*n, tol);
            j["coshDn"] = {fe.coshDn.real(), fe.coshDn.imag()};
            j["branchTag"] = to_string(fe.branchTag);
            j["gmtRhoH1"] = to_json(gmt_value(fe.rho, involution_h1(), tol));
            break;
        }
        case CatalogGroup::O2: {
            FigureEightData fe = figure_eight_generators(*n, tol);
            ProjectiveMatrix h3 = involution_h3(*n, tol);
            j["coshDn"] = {fe.coshDn.real(), fe.coshDn.imag()};
            j["branchTag"] = to_string(fe.branchTag);
            j["gmtBH3"] = to_json(gmt_value(fe.b, h3, tol));
            break;
        }
        case CatalogGroup::O3: {
            O3Data data = o3_representation(tol);
            j["tunnelParameter"] = {data.tunnelParameter.real(), data.tunnelParameter.imag()};
            j["newtonStart"] = {data.newtonStart.real(), data.newtonStart.imag()};
            j["gmt"] = to_json(gmt_value(data.rep.assignment.at("a"),
                                         data.rep.assignment.at("b"), tol));
            break;
        }
        case CatalogGroup::O4: {
            O4Data data = o4_representation(tol);
            j["gmt"] = to_json(gmt_value(data.rep.assignment.at("a"),
                                         data.rep.assignment.at("p"), tol));
            break;
        }
        case CatalogGroup::KnotGroup:
            break;
    }
    return j;
}

}  // namespace gmt
