#include "hitcalc/golden.hpp"
#include "hitcalc/invariants.hpp"
#include "hitcalc/maps.hpp"

#include "CLI11.hpp"
#include "json.hpp"

#include <fstream>
#include <iostream>

using namespace hitcalc;
using nlohmann::json;

namespace {

#ifndef HITCALC_DEFAULT_DATA
#define HITCALC_DEFAULT_DATA "data/golden_p5.txt"
#endif

struct CliOptions {
    RunConfig run;
    std::string format = "text";
    std::string data_path = HITCALC_DEFAULT_DATA;
};

Monomial parse_monomial_arg(const std::string& text)
{
    // [a1,a2,...]
    std::vector<uint32_t> exps;
    std::string body = text;
    if (body.size() < 2 || body.front() != '[' || body.back() != ']')
        throw domain_error("monomial syntax: [a1,a2,...]");
    body = body.substr(1, body.size() - 2);
    std::istringstream in(body);
    std::string tok;
    while (std::getline(in, tok, ','))
        exps.push_back(uint32_t(std::stoul(tok)));
    if (exps.empty() || exps.size() > size_t(kMaxVars))
        throw domain_error("between 1 and 6 exponents expected");
    return Monomial(int(exps.size()), exps);
}

Polynomial parse_polynomial_arg(const std::string& text, int s)
{
    // +-separated exponent arrays
    std::vector<Monomial> terms;
    size_t pos = 0;
    while (pos < text.size()) {
        size_t end = text.find('+', pos);
        if (end == std::string::npos)
            end = text.size();
        std::string part = text.substr(pos, end - pos);
        while (!part.empty() && isspace((unsigned char)part.front()))
            part.erase(part.begin());
        while (!part.empty() && isspace((unsigned char)part.back()))
            part.pop_back();
        if (!part.empty())
            terms.push_back(parse_monomial_arg(part));
        pos = end + 1;
    }
    if (terms.empty())
        throw domain_error("empty polynomial");
    for (const Monomial& m : terms)
        if (m.vars() != s)
            throw domain_error("every term needs " + std::to_string(s) + " exponents");
    return Polynomial(s, terms);
}

WeightVector parse_weight_arg(const std::string& text)
{
    Monomial m = parse_monomial_arg(text);
    std::vector<int> entries;
    for (int i = 0; i < m.vars(); ++i)
        entries.push_back(int(m.exp(i)));
    return WeightVector(entries);
}

json monomial_json(const Monomial& m)
{
    json arr = json::array();
    for (int i = 0; i < m.vars(); ++i)
        arr.push_back(m.exp(i));
    return arr;
}

json bits_json(const gf2::BitVec& v)
{
    json arr = json::array();
    for (int i = 0; i < v.size(); ++i)
        arr.push_back(v.get(i) ? 1 : 0);
    return arr;
}

json quotient_json(const QuotientBasis& q)
{
    json out;
    out["s"] = q.space().vars();
    out["degree"] = q.space().degree();
    out["dim"] = q.dim();
    json adm = json::array();
    for (const Monomial& m : q.admissible())
        adm.push_back(monomial_json(m));
    out["admissible"] = adm;
    json bw = json::object();
    for (const auto& [w, count] : q.by_weight())
        bw[w.to_string()] = count;
    out["by_weight"] = bw;
    out["p0"] = q.p0_count();
    out["p_plus"] = q.pplus_count();
    return out;
}

void emit(const json& payload, const CliOptions& opt,
          const std::function<void(std::ostream&)>& text_writer,
          const std::function<void(std::ostream&)>& csv_writer = {})
{
    if (opt.format == "json") {
        std::cout << payload.dump(2) << "\n";
    } else if (opt.format == "csv" && csv_writer) {
        csv_writer(std::cout);
    } else {
        text_writer(std::cout);
    }
}

int cmd_dim(const CliOptions& opt, int s, long long d)
{
    std::cerr << "building (QP_" << s << ")_" << d << ", strategy "
              << (opt.run.strategy == Strategy::direct ? "direct" : "recursive") << "\n";
    QuotientBasis q = QuotientBasis::build(s, d, opt.run);
    json payload = quotient_json(q);
    payload.erase("admissible");
    emit(payload, opt,
         [&](std::ostream& os) {
             os << "dim (QP_" << s << ")_" << d << " = " << q.dim() << "\n";
             os << "  zero part " << q.p0_count() << ", positive part "
                << q.pplus_count() << "\n";
             for (const auto& [w, count] : q.by_weight())
                 os << "  weight " << w.to_string() << ": " << count << "\n";
         },
         [&](std::ostream& os) {
             os << "s,degree,weight,count\n";
             for (const auto& [w, count] : q.by_weight())
                 os << s << "," << d << ",\"" << w.to_string() << "\"," << count << "\n";
         });
    return 0;
}

int cmd_basis(const CliOptions& opt, int s, long long d, const std::string& omega)
{
    QuotientBasis q = QuotientBasis::build(s, d, opt.run);
    std::vector<Monomial> list =
        omega.empty() ? q.admissible() : q.admissible_of_weight(parse_weight_arg(omega));
    json payload = quotient_json(q);
    if (!omega.empty()) {
        json adm = json::array();
        for (const Monomial& m : list)
            adm.push_back(monomial_json(m));
        payload["admissible"] = adm;
        payload["omega"] = omega;
    }
    emit(payload, opt,
         [&](std::ostream& os) {
             os << "admissible monomials of (QP_" << s << ")_" << d;
             if (!omega.empty())
                 os << " with weight " << omega;
             os << " (" << list.size() << "):\n";
             for (const Monomial& m : list)
                 os << "  " << m.json() << "  " << m.to_string() << "\n";
         },
         [&](std::ostream& os) {
             os << "monomial\n";
             for (const Monomial& m : list)
                 os << "\"" << m.json() << "\"\n";
         });
    return 0;
}

int cmd_hit_test(const CliOptions& opt, int s, const std::string& poly_text,
                 bool with_certificate)
{
    Polynomial f = parse_polynomial_arg(poly_text, s);
    RunConfig cfg = opt.run;
    cfg.track_certificates = with_certificate;
    QuotientBasis q = QuotientBasis::build(s, f.degree(), cfg);
    bool hit = q.is_hit(f);
    json payload;
    payload["s"] = s;
    payload["degree"] = f.degree();
    payload["hit"] = hit;
    size_t cert_size = 0;
    if (hit && with_certificate) {
        auto cert = q.hit_certificate(f);
        cert_size = cert->size();
        json gens = json::array();
        for (const HitGenerator& g : *cert) {
            json e;
            e["k"] = g.k;
            e["m"] = monomial_json(g.m);
            gens.push_back(e);
        }
        payload["certificate"] = gens;
    }
    if (!hit) {
        gf2::BitVec coords = q.reduce_coords(f);
        json cls = json::array();
        for (int pos : coords.ones())
            cls.push_back(monomial_json(q.admissible()[pos]));
        payload["class"] = cls;
    }
    emit(payload, opt, [&](std::ostream& os) {
        if (hit) {
            os << "hit";
            if (with_certificate)
                os << " (certificate with " << cert_size << " generators)";
            os << "\n";
        } else {
            os << "not hit; class has " << q.reduce_coords(f).popcount()
               << " admissible terms\n";
        }
    });
    return 0;
}

int cmd_strict_test(const CliOptions& opt, const std::string& mono_text)
{
    Monomial m = parse_monomial_arg(mono_text);
    bool strict = is_strictly_inadmissible(m, opt.run);
    QuotientBasis q = QuotientBasis::build(m.vars(), m.degree(), opt.run);
    bool admissible = q.is_admissible(m);
    json payload;
    payload["monomial"] = monomial_json(m);
    payload["strictly_inadmissible"] = strict;
    payload["admissible"] = admissible;
    emit(payload, opt, [&](std::ostream& os) {
        os << m.to_string() << ": "
           << (strict ? "strictly inadmissible"
                      : (admissible ? "admissible" : "inadmissible, not strictly"))
           << "\n";
    });
    return 0;
}

int cmd_kameko(const CliOptions& opt, int s, long long d)
{
    KamekoResult k = kameko_kernel(s, d, opt.run);
    json payload;
    payload["s"] = s;
    payload["degree"] = d;
    payload["target_degree"] = k.target_degree;
    payload["source_dim"] = k.source_dim;
    payload["target_dim"] = k.target_dim;
    payload["kernel_dim"] = k.kernel_dim;
    payload["surjective"] = k.surjective;
    json basis = json::array();
    for (const auto& v : k.kernel_basis)
        basis.push_back(bits_json(v));
    payload["kernel_basis"] = basis;
    emit(payload, opt, [&](std::ostream& os) {
        os << "Kameko (QP_" << s << ")_" << d << " -> (QP_" << s << ")_"
           << k.target_degree << ": kernel dim " << k.kernel_dim << ", "
           << (k.surjective ? "surjective" : "NOT surjective") << "\n";
    });
    return 0;
}

int cmd_invariants(const CliOptions& opt, int s, long long d, const std::string& group,
                   const std::string& omega)
{
    QuotientBasis q = QuotientBasis::build(s, d, opt.run);
    Group g = (group == "GL") ? Group::GL : Group::Sigma;
    FixedPoints fp;
    std::string space = "(QP_" + std::to_string(s) + ")_" + std::to_string(d);
    if (omega.empty()) {
        fp = invariants(q, g);
    } else {
        fp = invariants_on_weight(q, g, parse_weight_arg(omega));
        space = "QP_" + std::to_string(s) + "(" + omega + ")";
    }
    json payload;
    payload["space"] = space;
    payload["group"] = (g == Group::GL) ? "GL" : "Sigma";
    payload["dim"] = fp.dim;
    json basis = json::array();
    for (const auto& v : fp.basis)
        basis.push_back(bits_json(v));
    payload["basis"] = basis;
    emit(payload, opt, [&](std::ostream& os) {
        os << space << "^" << (g == Group::GL ? "GL_" : "Sigma_") << s << ": dim "
           << fp.dim << "\n";
    });
    return 0;
}

int cmd_verify(const CliOptions& opt, int t)
{
    golden::Catalog cat = golden::load_catalog_file(opt.data_path);
    golden::check_catalog(cat, std::max(t, 5));
    std::cerr << "catalog self-checks passed through t=" << std::max(t, 5) << "\n";
    golden::VerifyReport rep = golden::verify_against_computed(cat, t, opt.run);
    json payload;
    payload["t"] = rep.t;
    payload["degree"] = rep.degree;
    payload["pass"] = rep.pass;
    payload["dim"] = rep.dim_total;
    payload["dim_lower"] = rep.dim_lower;
    payload["count_identity"] = rep.count_identity;
    payload["section_embeds"] = rep.section_embeds;
    json checks = json::array();
    for (const auto& c : rep.checks) {
        json e;
        e["name"] = c.name;
        e["expected"] = c.expected;
        e["computed"] = c.computed;
        json miss = json::array(), extra = json::array();
        for (const Monomial& m : c.missing)
            miss.push_back(monomial_json(m));
        for (const Monomial& m : c.extra)
            extra.push_back(monomial_json(m));
        e["missing"] = miss;
        e["extra"] = extra;
        checks.push_back(e);
    }
    payload["checks"] = checks;
    emit(payload, opt, [&](std::ostream& os) {
        os << "verify t=" << t << " (degree " << rep.degree << "): "
           << (rep.pass ? "PASS" : "FAIL") << "\n";
        for (const auto& c : rep.checks) {
            os << "  " << c.name << ": golden " << c.expected << ", computed "
               << c.computed;
            if (!c.ok())
                os << "  [" << c.missing.size() << " missing, " << c.extra.size()
                   << " extra]";
            os << "\n";
            for (const Monomial& m : c.missing)
                os << "    missing " << m.json() << "\n";
            for (const Monomial& m : c.extra)
                os << "    extra   " << m.json() << "\n";
        }
        os << "  dim " << rep.dim_total << " = golden counts + lower dim "
           << rep.dim_lower << ": " << (rep.count_identity ? "ok" : "MISMATCH") << "\n";
        os << "  lifted lower basis admissible: " << (rep.section_embeds ? "ok" : "NO")
           << "\n";
    });
    return rep.pass ? 0 : 2;
}

int cmd_export(const CliOptions& opt, int s, long long d, const std::string& out_path)
{
    QuotientBasis q = QuotientBasis::build(s, d, opt.run);
    json payload = quotient_json(q);
    if (out_path.empty() || out_path == "-") {
        std::cout << payload.dump(2) << "\n";
    } else {
        std::ofstream out(out_path);
        if (!out)
            throw domain_error("cannot open output file " + out_path);
        out << payload.dump(2) << "\n";
        std::cerr << "wrote " << out_path << "\n";
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv)
{
    CLI::App app{"admissible-monomial bases of F_2[x_1..x_s] over the Steenrod algebra"};
    app.require_subcommand(1);
    app.set_config("--config");

    CliOptions opt;
    std::string strategy = "direct";
    app.add_option("--format", opt.format, "output format")
        ->check(CLI::IsMember({"text", "json", "csv"}))
        ->envname("HITCALC_FORMAT")
        ->capture_default_str();
    app.add_option("--strategy", strategy, "dimension strategy")
        ->check(CLI::IsMember({"direct", "recursive"}))
        ->envname("HITCALC_STRATEGY")
        ->capture_default_str();
    app.add_option("--max-space", opt.run.max_space, "largest degree-space size")
        ->envname("HITCALC_MAX_SPACE")
        ->capture_default_str();
    app.add_option("--threads", opt.run.threads, "thread budget")
        ->envname("HITCALC_THREADS")
        ->capture_default_str();
    app.add_flag("--exhaustive-generators", opt.run.exhaustive_generators,
                 "span the hit subspace with every Sq^k instead of only Sq^{2^i}")
        ->envname("HITCALC_EXHAUSTIVE_GENERATORS");
    app.add_option("--data", opt.data_path, "golden data file")
        ->envname("HITCALC_DATA")
        ->capture_default_str();

    int s = 5;
    long long d = 0;
    int t = 1;
    std::string group = "GL", omega, poly_text, mono_text, out_path;
    bool certificate = true;

    CLI::App* dim = app.add_subcommand("dim", "dimension of (QP_s)_d with breakdowns");
    dim->add_option("-s", s, "variable count")->required()->check(CLI::Range(1, 6));
    dim->add_option("-d", d, "degree")->required()->check(CLI::NonNegativeNumber);

    CLI::App* basis = app.add_subcommand("basis", "list the admissible monomials");
    basis->add_option("-s", s)->required()->check(CLI::Range(1, 6));
    basis->add_option("-d", d)->required()->check(CLI::NonNegativeNumber);
    basis->add_option("--omega", omega, "restrict to one weight vector, e.g. [3,3,1]");

    CLI::App* hit = app.add_subcommand("hit-test", "is the polynomial hit?");
    hit->add_option("-s", s)->required()->check(CLI::Range(1, 6));
    hit->add_option("polynomial", poly_text, "+-separated exponent arrays")->required();
    hit->add_flag("--certificate,!--no-certificate", certificate,
                  "track a hit certificate (default on)");

    CLI::App* strict = app.add_subcommand("strict-test", "strict-inadmissibility test");
    strict->add_option("monomial", mono_text, "exponent array, e.g. [1,2,2,3,5]")
        ->required();

    CLI::App* kameko = app.add_subcommand("kameko", "kernel of Kameko's homomorphism");
    kameko->add_option("-s", s)->required()->check(CLI::Range(1, 6));
    kameko->add_option("-d", d)->required()->check(CLI::NonNegativeNumber);

    CLI::App* inv = app.add_subcommand("invariants", "fixed points of Sigma_s or GL_s");
    inv->add_option("-s", s)->required()->check(CLI::Range(1, 6));
    inv->add_option("-d", d)->required()->check(CLI::NonNegativeNumber);
    inv->add_option("--group", group, "Sigma or GL")
        ->check(CLI::IsMember({"Sigma", "GL"}));
    inv->add_option("--omega", omega, "weight subquotient, e.g. [3,3,1]");

    CLI::App* verify = app.add_subcommand("verify", "check golden catalogs at t");
    verify->add_option("--t", t, "family parameter")->required()->check(CLI::Range(1, 3));

    CLI::App* exp = app.add_subcommand("export", "write the quotient basis as JSON");
    exp->add_option("-s", s)->required()->check(CLI::Range(1, 6));
    exp->add_option("-d", d)->required()->check(CLI::NonNegativeNumber);
    exp->add_option("-o,--out", out_path, "output path, - for stdout");

    try {
        app.parse(argc, argv);
        opt.run.strategy = parse_strategy(strategy);
        if (dim->parsed())
            return cmd_dim(opt, s, d);
        if (basis->parsed())
            return cmd_basis(opt, s, d, omega);
        if (hit->parsed())
            return cmd_hit_test(opt, s, poly_text, certificate);
        if (strict->parsed())
            return cmd_strict_test(opt, mono_text);
        if (kameko->parsed())
            return cmd_kameko(opt, s, d);
        if (inv->parsed())
            return cmd_invariants(opt, s, d, group, omega);
        if (verify->parsed())
            return cmd_verify(opt, t);
        if (exp->parsed())
            return cmd_export(opt, s, d, out_path);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 1;
    } catch (const resource_error& e) {
        std::cerr << "resource limit: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 1;
}
