#include "qutrit/clusters.hpp"

#include <cmath>

#include "qutrit/error.hpp"

namespace qutrit {

namespace {

const double kSqrt2 = std::sqrt(2.0);
const double kSqrt3 = std::sqrt(3.0);
const double kSqrt6 = std::sqrt(6.0);
const double kSqrtTwoThirds = std::sqrt(2.0 / 3.0);
// The printed 3 sqrt3 / sqrt2.
const double kCubicCoeff = 3.0 * kSqrt3 / kSqrt2;

std::string sub_case_id(const std::vector<Field>& slots) {
    std::string id = "(";
    for (std::size_t i = 0; i < slots.size(); ++i) {
        if (i) id += ",";
        id += field_name(slots[i]);
    }
    return id + ")";
}

std::vector<ClusterCase> build_catalog() {
    using F = Field;
    const std::vector<std::pair<ClusterId, std::vector<std::vector<Field>>>> rows = {
        {ClusterId::I, {{F::X, F::Y}}},
        {ClusterId::II, {{F::Y, F::Alpha2}, {F::Y, F::Beta2}}},
        {ClusterId::III, {{F::A, F::Alpha2}, {F::Beta1, F::Alpha2}}},
        {ClusterId::IV, {{F::B, F::Alpha2}, {F::Alpha1, F::Alpha2}}},
        {ClusterId::V, {{F::Y, F::A}, {F::Y, F::B}, {F::Y, F::Alpha1}, {F::Y, F::Beta1}}},
        {ClusterId::VI,
         {{F::A, F::B},
          {F::A, F::Alpha1},
          {F::A, F::Beta1},
          {F::A, F::Beta2},
          {F::B, F::Alpha1},
          {F::B, F::Beta1},
          {F::B, F::Beta2},
          {F::Alpha1, F::Beta1},
          {F::Alpha1, F::Beta2},
          {F::Beta1, F::Beta2},
          {F::Alpha2, F::Beta2}}},
        {ClusterId::VII,
         {{F::X, F::A}, {F::X, F::B}, {F::X, F::Alpha1}, {F::X, F::Beta1}, {F::X, F::Alpha2}, {F::X, F::Beta2}}},
        {ClusterId::FourVariable,
         {{F::X, F::Y, F::Alpha1, F::Beta1}, {F::A, F::B, F::Alpha2, F::Beta2}, {F::A, F::B, F::Alpha1, F::Beta1}}},
    };
    std::vector<ClusterCase> out;
    for (const auto& [id, slot_lists] : rows) {
        for (const auto& slots : slot_lists) out.push_back({id, sub_case_id(slots), slots});
    }
    return out;
}

std::vector<std::string> sub_cases_of(ClusterId id) {
    std::vector<std::string> out;
    for (const ClusterCase& c : catalog()) {
        if (c.cluster == id) out.push_back(c.sub_case);
    }
    return out;
}

using Fn2 = double (*)(double, double);
using Fn4 = double (*)(double, double, double, double);

std::function<double(std::span<const double>)> wrap(Fn2 f) {
    return [f](std::span<const double> v) { return f(v[0], v[1]); };
}
std::function<double(std::span<const double>)> wrap(Fn4 f) {
    return [f](std::span<const double> v) { return f(v[0], v[1], v[2], v[3]); };
}

struct RowForms {
    std::string ineq_ref8;
    Fn2 ref8;
    std::string ineq_this;
    Fn2 this_work;
    std::array<std::string, 3> comp_text;
    std::array<Fn2, 3> comp;
};

// Table 5 rows that are printed in full.
RowForms table5_row_I() {
    return {"s^2 + t^2 <= 2/3",
            [](double s, double t) { return s * s + t * t; },
            "(3/2)(s^2 + t^2) <= 1",
            [](double s, double t) { return 1.5 * (s * s + t * t); },
            {"u1^2 = (3/4)s^2 + (1/4)t^2 + (sqrt3/2)st", "u2^2 = t^2",
             "u3^2 = (3/4)s^2 + (1/4)t^2 - (sqrt3/2)st"},
            {[](double s, double t) { return 0.75 * s * s + 0.25 * t * t + kSqrt3 / 2.0 * s * t; },
             [](double, double t) { return t * t; },
             [](double s, double t) { return 0.75 * s * s + 0.25 * t * t - kSqrt3 / 2.0 * s * t; }}};
}

RowForms table5_row_II() {
    return {"s^2 + 2t^2 <= 2/3",
            [](double s, double t) { return s * s + 2.0 * t * t; },
            "(3/2)(s^2 + 2t^2) <= 1",
            [](double s, double t) { return 1.5 * (s * s + 2.0 * t * t); },
            {"u1^2 = (1/4)s^2 + (3/2)t^2", "u2^2 = s^2", "u3^2 = (1/4)s^2 - (3/2)t^2"},
            {[](double s, double t) { return 0.25 * s * s + 1.5 * t * t; },
             [](double s, double) { return s * s; },
             [](double s, double t) { return 0.25 * s * s - 1.5 * t * t; }}};
}

RowForms table5_row_III() {
    return {"2(s^2 + t^2) <= 2/3",
            [](double s, double t) { return 2.0 * (s * s + t * t); },
            "3(s^2 + t^2) <= 1",
            [](double s, double t) { return 3.0 * (s * s + t * t); },
            {"u1^2 = (3/4)s^2 + (3/2)t^2", "u2^2 = (3/2)s^2", "u3^2 = (3/4)s^2 + (3/2)t^2"},
            {[](double s, double t) { return 0.75 * s * s + 1.5 * t * t; },
             [](double s, double) { return 1.5 * s * s; },
             [](double s, double t) { return 0.75 * s * s + 1.5 * t * t; }}};
}

RowForms table5_row_VI() {
    return {"2(s^2 + t^2) <= 2/3",
            [](double s, double t) { return 2.0 * (s * s + t * t); },
            "3(s^2 + t^2) <= 1",
            [](double s, double t) { return 3.0 * (s * s + t * t); },
            {"u1^2 = (3/4)s^2 + (3/4)t^2", "u2^2 = (3/2)s^2 + (3/2)t^2", "u3^2 = (3/4)s^2 + (3/4)t^2"},
            {[](double s, double t) { return 0.75 * (s * s + t * t); },
             [](double s, double t) { return 1.5 * (s * s + t * t); },
             [](double s, double t) { return 0.75 * (s * s + t * t); }}};
}

struct Ineq2Forms {
    std::string ref8_text;
    Fn2 ref8;
    std::string this_text;
    Fn2 this_work;
    std::array<std::string, 3> f_text;
    std::array<Fn2, 3> f;
};

std::vector<std::pair<ClusterId, Ineq2Forms>> table52a_rows() {
    std::vector<std::pair<ClusterId, Ineq2Forms>> rows;
    rows.push_back(
        {ClusterId::I,
         {"1/9 - (1/2)(s^2 + t^2) + (t/sqrt6)(3s^2 - t^2) >= 0",
          [](double s, double t) { return 1.0 / 9.0 - 0.5 * (s * s + t * t) + t / kSqrt6 * (3.0 * s * s - t * t); },
          "(9/2)(s^2 + t^2) - (3sqrt3/sqrt2)(3s^2 - t^2)t <= 1",
          [](double s, double t) { return 4.5 * (s * s + t * t) - kCubicCoeff * (3.0 * s * s - t * t) * t; },
          {"F1 = (3s^2 + t^2)/12 - t(9s^2 + t^2)/(6sqrt6)", "F2 = (t^2/3)(1 + 2sqrt(2/3)t)",
           "F3 = (s/(2sqrt2)){sqrt(2/3)t - (s^2 + t^2)}"},
          {[](double s, double t) { return (3.0 * s * s + t * t) / 12.0 - t * (9.0 * s * s + t * t) / (6.0 * kSqrt6); },
           [](double, double t) { return t * t / 3.0 * (1.0 + 2.0 * kSqrtTwoThirds * t); },
           [](double s, double t) { return s / (2.0 * kSqrt2) * (kSqrtTwoThirds * t - (s * s + t * t)); }}}});
    rows.push_back(
        {ClusterId::II,
         {"1/9 - (s^2/2 + t^2) + (s/sqrt6)(6t^2 - s^2) >= 0",
          [](double s, double t) { return 1.0 / 9.0 - (s * s / 2.0 + t * t) + s / kSqrt6 * (6.0 * t * t - s * s); },
          "9((s^2 + t^2)/2) - (3sqrt3/sqrt2)(6t^2 - s^2)s <= 1",
          [](double s, double t) { return 9.0 * ((s * s + t * t) / 2.0) - kCubicCoeff * (6.0 * t * t - s * s) * s; },
          {"F1 = s^2/12 - s^3/(6sqrt6) + (1 - sqrt6 s)t^2/2", "F2 = (s^2/3)(1 + 2sqrt(2/3)s)", "F3 = 0"},
          {[](double s, double t) { return s * s / 12.0 - s * s * s / (6.0 * kSqrt6) + (1.0 - kSqrt6 * s) * t * t / 2.0; },
           [](double s, double) { return s * s / 3.0 * (1.0 + 2.0 * kSqrtTwoThirds * s); },
           [](double, double) { return 0.0; }}}});
    rows.push_back({ClusterId::III,
                    {"1/9 - (s^2 + t^2) + 3s^2 t >= 0",
                     [](double s, double t) { return 1.0 / 9.0 - (s * s + t * t) + 3.0 * s * s * t; },
                     "9(s^2 + t^2) - 27s^2 t <= 1",
                     [](double s, double t) { return 9.0 * (s * s + t * t) - 27.0 * s * s * t; },
                     {"F1 = (s^2 + 2t^2)/4 - s^2 t", "F2 = -s^2 t", "F3 = 0"},
                     {[](double s, double t) { return (s * s + 2.0 * t * t) / 4.0 - s * s * t; },
                      [](double s, double t) { return -s * s * t; },
                      [](double, double) { return 0.0; }}}});
    rows.push_back({ClusterId::IV,
                    {"1/9 - (s^2 + t^2) - 3s^2 t >= 0",
                     [](double s, double t) { return 1.0 / 9.0 - (s * s + t * t) - 3.0 * s * s * t; },
                     "9(s^2 + t^2) + 27s^2 t <= 1",
                     [](double s, double t) { return 9.0 * (s * s + t * t) + 27.0 * s * s * t; },
                     {"F1 = s^2/4 + t^2(1/2 + s^2)", "F2 = s^2(1/2 + t)", "F3 = 0"},
                     {[](double s, double t) { return s * s / 4.0 + t * t * (0.5 + s * s); },
                      [](double s, double t) { return s * s * (0.5 + t); },
                      [](double, double) { return 0.0; }}}});
    rows.push_back(
        {ClusterId::V,
         {"1/9 - (s^2/2 + t^2) - (s/sqrt6)(3t^2 + s^2) >= 0",
          [](double s, double t) { return 1.0 / 9.0 - (s * s / 2.0 + t * t) - s / kSqrt6 * (3.0 * t * t + s * s); },
          "9(s^2/2 + t^2) + (3sqrt3/sqrt2)(3t^2 + s^2)s <= 1",
          [](double s, double t) { return 9.0 * (s * s / 2.0 + t * t) + kCubicCoeff * (3.0 * t * t + s * s) * s; },
          {"F1 = s^2/12 - s^3/(6sqrt6) + t^2/4", "F2 = (s^2/3)(1 + 2sqrt(2/3)s) + (1 + sqrt6 s)t^2/2", "F3 = 0"},
          {[](double s, double t) { return s * s / 12.0 - s * s * s / (6.0 * kSqrt6) + t * t / 4.0; },
           [](double s, double t) {
               return s * s / 3.0 * (1.0 + 2.0 * kSqrtTwoThirds * s) + (1.0 + kSqrt6 * s) * t * t / 2.0;
           },
           [](double, double) { return 0.0; }}}});
    rows.push_back({ClusterId::VII,
                    {"1/9 - (s^2/2 + t^2) >= 0",
                     [](double s, double t) { return 1.0 / 9.0 - (s * s / 2.0 + t * t); },
                     "9(s^2/2 + t^2) <= 1",
                     [](double s, double t) { return 9.0 * (s * s / 2.0 + t * t); },
                     {"F1 = (s^2 + t^2)/4", "F2 = t^2/2", "F3 = -s t^2/sqrt2"},
                     {[](double s, double t) { return (s * s + t * t) / 4.0; },
                      [](double, double t) { return t * t / 2.0; },
                      [](double s, double t) { return -s * t * t / kSqrt2; }}}});
    return rows;
}

std::vector<PrintedFormula> build_formulas() {
    std::vector<PrintedFormula> out;
    const std::array<Quantity, 3> u_q{Quantity::U1, Quantity::U2, Quantity::U3};
    const std::array<Quantity, 3> f_q{Quantity::F1, Quantity::F2, Quantity::F3};

    // Table 5: first inequality and u components. Rows IV, V, VII are printed as
    // "Same as cluster III/II" and inherit that row's expressions.
    struct Table5Row {
        ClusterId id;
        RowForms forms;
        std::string prefix;
    };
    const std::vector<Table5Row> t5 = {
        {ClusterId::I, table5_row_I(), ""},
        {ClusterId::II, table5_row_II(), ""},
        {ClusterId::III, table5_row_III(), ""},
        {ClusterId::IV, table5_row_III(), "Same as cluster III: "},
        {ClusterId::V, table5_row_II(), "Same as cluster II: "},
        {ClusterId::VI, table5_row_VI(), ""},
        {ClusterId::VII, table5_row_II(), "Same as cluster II: "},
    };
    for (const Table5Row& r : t5) {
        const std::string row(cluster_name(r.id));
        const auto subs = sub_cases_of(r.id);
        out.push_back({"Table 5", row, Quantity::Ineq1Ref8, r.prefix + r.forms.ineq_ref8, r.id, subs,
                       wrap(r.forms.ref8)});
        out.push_back({"Table 5", row, Quantity::Ineq1ThisWork, r.prefix + r.forms.ineq_this, r.id, subs,
                       wrap(r.forms.this_work)});
        for (std::size_t i = 0; i < 3; ++i) {
            out.push_back({"Table 5", row, u_q[i], r.prefix + r.forms.comp_text[i], r.id, subs,
                           wrap(r.forms.comp[i])});
        }
    }

    // Table 5.2a: second inequality and F functions, cluster VI excluded.
    for (const auto& [id, forms] : table52a_rows()) {
        const std::string row(cluster_name(id));
        const auto subs = sub_cases_of(id);
        out.push_back({"Table 5.2a", row, Quantity::Ineq2Ref8, forms.ref8_text, id, subs, wrap(forms.ref8)});
        out.push_back(
            {"Table 5.2a", row, Quantity::Ineq2ThisWork, forms.this_text, id, subs, wrap(forms.this_work)});
        for (std::size_t i = 0; i < 3; ++i) {
            out.push_back({"Table 5.2a", row, f_q[i], forms.f_text[i], id, subs, wrap(forms.f[i])});
        }
    }

    // Table 5.2b: cluster VI.
    {
        const auto subs = sub_cases_of(ClusterId::VI);
        out.push_back({"Table 5.2b", "VI", Quantity::Ineq2Ref8, "1/9 - (s^2 + t^2) >= 0", ClusterId::VI, subs,
                       wrap([](double s, double t) { return 1.0 / 9.0 - (s * s + t * t); })});
        out.push_back({"Table 5.2b", "VI", Quantity::Ineq2ThisWork, "9(s^2 + t^2) <= 1", ClusterId::VI, subs,
                       wrap([](double s, double t) { return 9.0 * (s * s + t * t); })});

        struct GroupForms {
            std::array<std::string, 3> text;
            std::array<Fn2, 3> f;
        };
        const Fn2 zero = [](double, double) { return 0.0; };
        const Fn2 quarter_sum = [](double s, double t) { return (s * s + t * t) / 4.0; };
        const Fn2 half_sum = [](double s, double t) { return (s * s + t * t) / 2.0; };
        const Fn2 quarter_s2t = [](double s, double t) { return (s * s + 2.0 * t * t) / 4.0; };
        const Fn2 half_s = [](double s, double) { return s * s / 2.0; };
        const std::array<GroupForms, 6> forms = {{
            {{"F1 = (s^2 + t^2)/4", "F2 = (s^2 + t^2)/2", "F3 = 0"}, {quarter_sum, half_sum, zero}},
            {{"F1 = (s^2 + t^2)/4", "F2 = (s^2 + t^2)/2", "F3 = st/2"},
             {quarter_sum, half_sum, [](double s, double t) { return s * t / 2.0; }}},
            {{"F1 = (s^2 + 2t^2)/4", "F2 = s^2/2", "F3 = 0"}, {quarter_s2t, half_s, zero}},
            {{"F1 = (s^2 + t^2)/4", "F2 = (s^2 + t^2)/2", "F3 = 0"}, {quarter_sum, half_sum, zero}},
            {{"F1 = (s^2 + t^2)/2", "F2 = 0", "F3 = 0"}, {half_sum, zero, zero}},
            {{"F1 = (s^2 + 2t^2)/4", "F2 = s^2/2", "F3 = 0"}, {quarter_s2t, half_s, zero}},
        }};
        const auto& groups = cluster_vi_groupings();
        for (std::size_t g = 0; g < groups.size(); ++g) {
            for (std::size_t i = 0; i < 3; ++i) {
                out.push_back({"Table 5.2b", groups[g].label, f_q[i], forms[g].text[i], ClusterId::VI,
                               groups[g].members, wrap(forms[g].f[i])});
            }
        }
    }

    // Table 5.3: four-variable cases. Printed slot names (s,t,u,v) read as (s,t,p,q).
    {
        struct QuadForms {
            std::string sub;
            std::array<std::string, 3> text;
            std::array<Fn4, 3> f;
        };
        const std::array<QuadForms, 3> quads = {{
            {"(x,y,alpha1,beta1)",
             {"F1 = (3s^2 + t^2)/12 - t(9s^2 + t^2)/(6sqrt6) + (p^2 + q^2)/4",
              "F2 = (t^2/3)(1 + 2sqrt(2/3)t) + ((p^2 + q^2)/2)(1 + sqrt6 t)",
              "F3 = (s/(2sqrt2)){sqrt(2/3)t - (s^2 + t^2) - 2(p^2 + q^2)}"},
             {[](double s, double t, double p, double q) {
                  return (3.0 * s * s + t * t) / 12.0 - t * (9.0 * s * s + t * t) / (6.0 * kSqrt6) + (p * p + q * q) / 4.0;
              },
              [](double, double t, double p, double q) {
                  return t * t / 3.0 * (1.0 + 2.0 * kSqrtTwoThirds * t) + (p * p + q * q) / 2.0 * (1.0 + kSqrt6 * t);
              },
              [](double s, double t, double p, double q) {
                  return s / (2.0 * kSqrt2) * (kSqrtTwoThirds * t - (s * s + t * t) - 2.0 * (p * p + q * q));
              }}},
            {"(a,b,alpha2,beta2)",
             {"F1 = (s^2 + t^2)/4 + (p^2 + q^2)/2 - (s^2 - t^2)p - 2stq",
              "F2 = (s^2 + t^2)/2 - (s^2 - t^2)p - 2stq", "F3 = 0"},
             {[](double s, double t, double p, double q) {
                  return (s * s + t * t) / 4.0 + (p * p + q * q) / 2.0 - (s * s - t * t) * p - 2.0 * s * t * q;
              },
              [](double s, double t, double p, double q) {
                  return (s * s + t * t) / 2.0 - (s * s - t * t) * p - 2.0 * s * t * q;
              },
              [](double, double, double, double) { return 0.0; }}},
            {"(a,b,alpha1,beta1)",
             {"F1 = A^2/4", "F2 = A^2/2", "F3 = C^2/2"},
             {[](double s, double t, double p, double q) { return (s * s + t * t + p * p + q * q) / 4.0; },
              [](double s, double t, double p, double q) { return (s * s + t * t + p * p + q * q) / 2.0; },
              [](double s, double t, double p, double q) { return (s * p + t * q) / 2.0; }}},
        }};
        for (const QuadForms& qf : quads) {
            for (std::size_t i = 0; i < 3; ++i) {
                out.push_back({"Table 5.3", qf.sub, f_q[i], qf.text[i], ClusterId::FourVariable, {qf.sub},
                               wrap(qf.f[i])});
            }
        }
    }
    return out;
}

bool covers(const PrintedFormula& f, const ClusterCase& c) {
    if (f.cluster != c.cluster) return false;
    for (const std::string& s : f.sub_cases) {
        if (s == c.sub_case) return true;
    }
    return false;
}

void require_arity(const ClusterCase& c, std::size_t n) {
    if (n != c.arity()) {
        throw ArityMismatch("case " + c.sub_case + " takes " + std::to_string(c.arity()) + " slot values, got " +
                            std::to_string(n));
    }
}

}  // namespace

std::string_view cluster_name(ClusterId id) {
    switch (id) {
        case ClusterId::I: return "I";
        case ClusterId::II: return "II";
        case ClusterId::III: return "III";
        case ClusterId::IV: return "IV";
        case ClusterId::V: return "V";
        case ClusterId::VI: return "VI";
        case ClusterId::VII: return "VII";
        case ClusterId::FourVariable: return "4var";
    }
    return "?";
}

std::optional<ClusterId> cluster_from_name(std::string_view name) {
    for (ClusterId id : {ClusterId::I, ClusterId::II, ClusterId::III, ClusterId::IV, ClusterId::V, ClusterId::VI,
                         ClusterId::VII, ClusterId::FourVariable}) {
        if (cluster_name(id) == name) return id;
    }
    return std::nullopt;
}

std::string_view quantity_name(Quantity q) {
    switch (q) {
        case Quantity::Ineq1Ref8: return "ineq1 (ref8)";
        case Quantity::Ineq1ThisWork: return "ineq1 (this work)";
        case Quantity::Ineq2Ref8: return "ineq2 (ref8)";
        case Quantity::Ineq2ThisWork: return "ineq2 (this work)";
        case Quantity::U1: return "u1^2";
        case Quantity::U2: return "u2^2";
        case Quantity::U3: return "u3^2";
        case Quantity::F1: return "F1";
        case Quantity::F2: return "F2";
        case Quantity::F3: return "F3";
    }
    return "?";
}

const std::vector<ClusterCase>& catalog() {
    static const std::vector<ClusterCase> cases = build_catalog();
    return cases;
}

std::vector<ClusterCase> cases_of(ClusterId id) {
    std::vector<ClusterCase> out;
    for (const ClusterCase& c : catalog()) {
        if (c.cluster == id) out.push_back(c);
    }
    return out;
}

const ClusterCase& find_case(ClusterId id, std::string_view sub_case) {
    std::string wanted;
    for (char ch : sub_case) {
        if (ch != ' ') wanted += ch;
    }
    for (const ClusterCase& c : catalog()) {
        if (c.cluster == id && (wanted.empty() || c.sub_case == wanted)) return c;
    }
    throw UnknownCase("no case " + std::string(sub_case) + " in cluster " + std::string(cluster_name(id)));
}

const std::vector<ClusterViGrouping>& cluster_vi_groupings() {
    static const std::vector<ClusterViGrouping> groups = {
        {"(a,b),(a,beta1),(b,alpha1)", {"(a,b)", "(a,beta1)", "(b,alpha1)"}},
        {"(a,alpha1),(b,beta1)", {"(a,alpha1)", "(b,beta1)"}},
        // Printed with a missing parenthesis around the third pair.
        {"(a,beta2),(b,beta2),alpha1,beta2", {"(a,beta2)", "(b,beta2)", "(alpha1,beta2)"}},
        {"(alpha1,beta1)", {"(alpha1,beta1)"}},
        {"(alpha2,beta2)", {"(alpha2,beta2)"}},
        {"(beta1,beta2)", {"(beta1,beta2)"}},
    };
    return groups;
}

ParamVector instantiate(const ClusterCase& c, std::span<const double> values) {
    require_arity(c, values.size());
    ParamVector p;
    for (std::size_t i = 0; i < values.size(); ++i) p[c.slots[i]] = values[i];
    require_finite(p);
    return p;
}

const std::vector<PrintedFormula>& printed_formulas() {
    static const std::vector<PrintedFormula> formulas = build_formulas();
    return formulas;
}

double printed_value(const ClusterCase& c, Quantity q, std::span<const double> slot_values) {
    require_arity(c, slot_values.size());
    for (const PrintedFormula& f : printed_formulas()) {
        if (f.quantity == q && covers(f, c)) return f.evaluate(slot_values);
    }
    throw NoPrintedForm("no printed " + std::string(quantity_name(q)) + " for " + std::string(cluster_name(c.cluster)) +
                        " " + c.sub_case);
}

PrintedInequality printed_lhs(const ClusterCase& c, int inequality_index, Normalization norm,
                              std::span<const double> slot_values) {
    const bool ref8 = norm == Normalization::Ref8;
    PrintedInequality r;
    if (inequality_index == 1) {
        r.value = printed_value(c, ref8 ? Quantity::Ineq1Ref8 : Quantity::Ineq1ThisWork, slot_values);
        r.bound = ref8 ? 2.0 / 3.0 : 1.0;
        r.sense = Sense::LessEqual;
    } else if (inequality_index == 2) {
        r.value = printed_value(c, ref8 ? Quantity::Ineq2Ref8 : Quantity::Ineq2ThisWork, slot_values);
        r.bound = ref8 ? 0.0 : 1.0;
        r.sense = ref8 ? Sense::GreaterEqual : Sense::LessEqual;
    } else {
        throw NoPrintedForm("inequality index must be 1 or 2, got " + std::to_string(inequality_index));
    }
    return r;
}

}  // namespace qutrit
