#include "commands.hpp"

#include <iostream>

#include <json.hpp>

#include <dedekind/errors.hpp>
#include <dedekind/exact_linalg.hpp>
#include <dedekind/io.hpp>
#include <dedekind/oracle.hpp>

#include "ring_io.hpp"
#include "verdict.hpp"

namespace dedekind::cli {

namespace {

using nlohmann::json;

json matrix_to_json(const IntMatrix& M) {
    json rows = json::array();
    for (std::size_t i = 0; i < M.rows(); ++i) {
        json row = json::array();
        for (std::size_t j = 0; j < M.cols(); ++j) row.push_back(to_decimal(M(i, j)));
        rows.push_back(std::move(row));
    }
    return rows;
}

json ints_to_json(const std::vector<Int>& v) {
    json a = json::array();
    for (const Int& x : v) a.push_back(to_decimal(x));
    return a;
}

IntMatrix load_matrix(const std::string& path) {
    if (path == "-") {
        std::string text((std::istreambuf_iterator<char>(std::cin)),
                         std::istreambuf_iterator<char>());
        return IntMatrix::from_text(text);
    }
    return IntMatrix::from_text(read_file(path));
}

json presentation_json(const FiniteRingPresentation& R) {
    return json::parse(presentation_to_json(R));
}

json verdict_json(const Verdict& v) {
    json j;
    j["kind"] = to_string(v.kind);
    j["norm"] = to_decimal(v.norm);
    if (v.quotient) {
        j["quotient"] = presentation_json(*v.quotient);
        json cert;
        cert["snf_diagonal"] = ints_to_json(v.snf_diagonal);
        cert["tower_degrees"] = v.tower_degrees;
        j["certificate"] = std::move(cert);
    }
    return j;
}

/* Oracle cross-check of a verdict; returns false (and reports) only on a
 * genuine disagreement. */
bool oracle_check_ideal(const OrderPresentation& order, const TwoGenIdeal& ideal,
                        const Verdict& v, std::size_t cap, json& j, std::ostream& err) {
    try {
        EnumeratedRing E = enumerate_quotient(order, ideal, cap);
        const bool of = oracle_is_field(E);
        const bool ol = oracle_is_local(E);
        j["oracle"] = {{"checked", true}, {"is_field", of}, {"is_local", ol}};
        if (of != v.prime() || ol != v.prime_power()) {
            err << "oracle disagrees with verdict " << to_string(v.kind) << ": enumeration says field="
                << of << " local=" << ol << "\n";
            return false;
        }
    } catch (const CapExceededError&) {
        j["oracle"] = {{"checked", false}, {"reason", "quotient exceeds cap"}};
    }
    return true;
}

void emit(const json& j, const std::string& human, const GlobalOptions& opts,
          std::ostream& out) {
    if (opts.json)
        out << j.dump(2) << "\n";
    else
        out << human << "\n";
}

int verdict_command(const std::string& ring_path, const std::string& ideal_path,
                    const std::optional<Int>& h, const GlobalOptions& opts, std::ostream& out,
                    std::ostream& err, bool power) {
    OrderPresentation order = load_order(ring_path);
    IdealFile f = load_ideal(ideal_path, order.rank());
    std::optional<Int> hval = h ? h : f.h;

    Verdict v = classify_ideal(order, f.ideal, hval, opts.primality);
    const bool result = power ? v.prime_power() : v.prime();

    json j = verdict_json(v);
    j["result"] = result;
    bool oracle_ok = true;
    if (opts.oracle_cap > 0)
        oracle_ok = oracle_check_ideal(order, f.ideal, v, opts.oracle_cap, j, err);

    std::string human = std::string(power ? "prime power: " : "prime: ") +
                        (result ? "yes" : "no") + " [" + to_string(v.kind) +
                        ", norm " + to_decimal(v.norm) + "]";
    emit(j, human, opts, out);
    if (!oracle_ok) return kExitError;
    return result ? kExitTrue : kExitFalse;
}

}  // namespace

int cmd_validate(const std::string& ring_path, const GlobalOptions& opts, std::ostream& out,
                 std::ostream&) {
    OrderPresentation order = load_order(ring_path);
    OrderValidationReport report = validate_order(order);

    json j;
    j["ok"] = report.ok;
    json issues = json::array();
    std::string human = report.ok ? "ok" : "invalid:";
    for (const auto& issue : report.issues) {
        issues.push_back(issue.describe());
        human += "\n  " + issue.describe();
    }
    j["issues"] = std::move(issues);
    emit(j, human, opts, out);
    return report.ok ? kExitTrue : kExitFalse;
}

int cmd_norm(const std::string& ring_path, const std::string& ideal_path,
             const std::optional<Int>& h, const GlobalOptions& opts, std::ostream& out,
             std::ostream&) {
    OrderPresentation order = load_order(ring_path);
    IdealFile f = load_ideal(ideal_path, order.rank());
    const Int hval = h ? *h : f.h ? *f.h : norm_multiple(order, f.ideal);
    IdealHnfBasis basis = ideal_hnf_basis(order, f.ideal, hval);

    json j;
    j["norm"] = to_decimal(basis.norm);
    j["hnf_basis"] = matrix_to_json(basis.H);
    emit(j, to_decimal(basis.norm), opts, out);
    return kExitTrue;
}

int cmd_hnf(const std::string& matrix_path, const std::optional<Int>& h,
            const GlobalOptions& opts, std::ostream& out, std::ostream&) {
    IntMatrix A = load_matrix(matrix_path);
    HnfResult r = h ? hnf_with_transform(A, *h) : hnf_with_transform(A);

    json j;
    j["H"] = matrix_to_json(r.H);
    j["U"] = matrix_to_json(r.U);
    j["zero_columns"] = A.cols() - A.rows();
    emit(j, r.H.to_text(), opts, out);
    return kExitTrue;
}

int cmd_snf(const std::string& matrix_path, const std::optional<Int>& h,
            const GlobalOptions& opts, std::ostream& out, std::ostream&) {
    IntMatrix B = load_matrix(matrix_path);
    const Int hval = h ? *h : int_abs(det_modular(B));
    if (hval == 0) throw SingularError("snf: matrix is singular");
    SnfResult r = snf_with_transforms(B, hval);

    json j;
    j["diagonal"] = ints_to_json(r.diagonal());
    j["S"] = matrix_to_json(r.S);
    j["U"] = matrix_to_json(r.U);
    j["V"] = matrix_to_json(r.V);
    std::string human;
    for (const Int& d : r.diagonal()) human += (human.empty() ? "" : " ") + to_decimal(d);
    emit(j, human, opts, out);
    return kExitTrue;
}

int cmd_quotient(const std::string& ring_path, const std::string& ideal_path,
                 const std::optional<Int>& h, const GlobalOptions& opts, std::ostream& out,
                 std::ostream&) {
    OrderPresentation order = load_order(ring_path);
    IdealFile f = load_ideal(ideal_path, order.rank());
    const Int hval = h ? *h : f.h ? *f.h : norm_multiple(order, f.ideal);

    auto qb = output_basis(order, f.ideal, hval);
    json j;
    if (!qb) {
        j["unit_ideal"] = true;
        j["norm"] = "1";
        emit(j, "unit ideal", opts, out);
        return kExitTrue;
    }
    j = presentation_json(qb->ring);
    j["unit_ideal"] = false;
    j["norm"] = to_decimal(qb->certificate.norm);
    json cert;
    cert["snf_diagonal"] = ints_to_json(qb->certificate.snf_diagonal);
    cert["V"] = matrix_to_json(qb->certificate.V);
    cert["U"] = matrix_to_json(qb->certificate.U);
    cert["eta_basis"] = matrix_to_json(qb->certificate.eta_basis);
    j["certificate"] = std::move(cert);

    std::string human = "m=" + std::to_string(qb->ring.m()) + " d=[";
    for (std::size_t i = 0; i < qb->ring.m(); ++i)
        human += (i ? " " : "") + to_decimal(qb->ring.d[i]);
    human += "]";
    emit(j, human, opts, out);
    return kExitTrue;
}

int cmd_is_prime(const std::string& ring_path, const std::string& ideal_path,
                 const std::optional<Int>& h, const GlobalOptions& opts, std::ostream& out,
                 std::ostream& err) {
    return verdict_command(ring_path, ideal_path, h, opts, out, err, false);
}

int cmd_is_prime_power(const std::string& ring_path, const std::string& ideal_path,
                       const std::optional<Int>& h, const GlobalOptions& opts,
                       std::ostream& out, std::ostream& err) {
    return verdict_command(ring_path, ideal_path, h, opts, out, err, true);
}

namespace {

int presentation_predicate(const std::string& presentation_path, const GlobalOptions& opts,
                           std::ostream& out, std::ostream& err, bool local) {
    FiniteRingPresentation R = presentation_from_json(read_file(presentation_path));
    validate_presentation(R);

    json j;
    bool result;
    if (local) {
        result = is_local(R, opts.primality);
    } else {
        FieldTestResult ft = is_field_with_tower(R, opts.primality);
        result = ft.field;
        j["tower_degrees"] = ft.tower_degrees;
    }
    j["result"] = result;

    bool oracle_ok = true;
    if (opts.oracle_cap > 0) {
        try {
            EnumeratedRing E = enumerate_presentation(R, opts.oracle_cap);
            const bool oracle = local ? oracle_is_local(E) : oracle_is_field(E);
            j["oracle"] = {{"checked", true}, {"result", oracle}};
            if (oracle != result) {
                err << "oracle disagrees: enumeration says " << oracle << "\n";
                oracle_ok = false;
            }
        } catch (const CapExceededError&) {
            j["oracle"] = {{"checked", false}, {"reason", "ring exceeds cap"}};
        }
    }

    emit(j, std::string(local ? "local: " : "field: ") + (result ? "yes" : "no"), opts, out);
    if (!oracle_ok) return kExitError;
    return result ? kExitTrue : kExitFalse;
}

}  // namespace

int cmd_is_field(const std::string& presentation_path, const GlobalOptions& opts,
                 std::ostream& out, std::ostream& err) {
    return presentation_predicate(presentation_path, opts, out, err, false);
}

int cmd_is_local(const std::string& presentation_path, const GlobalOptions& opts,
                 std::ostream& out, std::ostream& err) {
    return presentation_predicate(presentation_path, opts, out, err, true);
}

}  // namespace dedekind::cli
