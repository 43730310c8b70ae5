// prism: command-line front end for the chain-lattice classification library.
// Exit codes: 0 success / positive decision, 1 definitive negative,
// 2 usage or input error, 3 internal invariant violation.

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "prism/alexander.hpp"
#include "prism/contfrac.hpp"
#include "prism/ctype.hpp"
#include "prism/families.hpp"
#include "prism/isometry.hpp"

using json = nlohmann::ordered_json;
using namespace prism;

namespace {

json jint(const Int& x) {
  if (x >= std::numeric_limits<long long>::min() &&
      x <= std::numeric_limits<long long>::max())
    return x.convert_to<long long>();
  return x.str();  // arbitrary-precision fallback: decimal string
}

json jints(const std::vector<Int>& v) {
  json a = json::array();
  for (const Int& x : v) a.push_back(jint(x));
  return a;
}

json jmat(const Mat& m) {
  json a = json::array();
  for (const Vec& row : m) a.push_back(jints(row));
  return a;
}

Int parse_int(const std::string& s) {
  try {
    return Int(s);
  } catch (const std::exception&) {
    throw domain_error("not an integer: " + s);
  }
}

std::pair<Int, Int> parse_fraction(const std::string& s) {
  auto slash = s.find('/');
  if (slash == std::string::npos) return {parse_int(s), 1};
  return {parse_int(s.substr(0, slash)), parse_int(s.substr(slash + 1))};
}

Mat read_gram_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw domain_error("cannot open " + path);
  json j;
  try {
    in >> j;
  } catch (const std::exception& e) {
    throw domain_error(std::string("bad JSON in ") + path + ": " + e.what());
  }
  if (!j.is_array()) throw domain_error(path + ": expected array of arrays");
  Mat m;
  for (const auto& row : j) {
    if (!row.is_array()) throw domain_error(path + ": expected array of arrays");
    Vec r;
    for (const auto& x : row) {
      if (x.is_number_integer())
        r.push_back(Int(x.get<long long>()));
      else if (x.is_string())
        r.push_back(parse_int(x.get<std::string>()));
      else
        throw domain_error(path + ": entries must be integers");
    }
    m.push_back(std::move(r));
  }
  return m;
}

Sigma parse_sigma(const std::vector<std::string>& args) {
  Sigma s;
  for (const auto& a : args) s.push_back(parse_int(a));
  return s;
}

std::string plain_ints(const std::vector<Int>& v) {
  std::ostringstream os;
  for (size_t i = 0; i < v.size(); ++i) os << (i ? " " : "") << v[i];
  return os.str();
}

json family_json(const FamilyRecord& f) {
  json j;
  j["family"] = f.family;
  if (f.has_r) j["r"] = jint(f.r);
  return j;
}

json census_json(const CensusRecord& rec) {
  json j;
  j["sigma"] = jints(rec.sigma);
  j["norm"] = jint(rec.norm);
  j["is_ctype"] = rec.is_ctype;
  if (rec.is_ctype) {
    j["q"] = jint(rec.q);
    j["p"] = jint(rec.p);
    j["vertex_norms"] = jints(rec.vertex_norms);
  } else {
    j["q"] = nullptr;
    j["p"] = nullptr;
    j["vertex_norms"] = nullptr;
  }
  json fams = json::array();
  for (const auto& f : rec.families) fams.push_back(family_json(f));
  j["families"] = fams;
  return j;
}

int run(int argc, char** argv) {
  CLI::App app{"exact lattice classification toolkit"};
  app.require_subcommand(1);
  bool as_json = false;
  app.add_flag("--json", as_json, "emit JSON on stdout");

  // cf expand / cf eval
  auto* cf = app.add_subcommand("cf", "continued fractions");
  cf->require_subcommand(1);
  auto* cf_expand = cf->add_subcommand("expand", "expand a fraction");
  bool cf_neg = false, cf_pos = false;
  std::string cf_frac;
  cf_expand->add_flag("--neg", cf_neg, "minus (ceiling) expansion");
  cf_expand->add_flag("--pos", cf_pos, "plus (floor) expansion");
  cf_expand->add_option("fraction", cf_frac, "num/den")->required();
  auto* cf_eval = cf->add_subcommand("eval", "evaluate coefficients");
  bool ce_neg = false, ce_pos = false;
  std::vector<std::string> cf_coeffs;
  cf_eval->add_flag("--neg", ce_neg, "minus convention");
  cf_eval->add_flag("--pos", ce_pos, "plus convention");
  cf_eval->add_option("coeffs", cf_coeffs, "coefficients")->required();

  // lattice shortvecs
  auto* lat = app.add_subcommand("lattice", "lattice queries");
  lat->require_subcommand(1);
  auto* sv = lat->add_subcommand("shortvecs", "vectors up to a norm bound");
  std::string sv_gram;
  std::string sv_bound;
  sv->add_option("--gram", sv_gram, "JSON Gram matrix file")->required();
  sv->add_option("--bound", sv_bound, "norm bound")->required();

  // ctype build / recover
  auto* ct = app.add_subcommand("ctype", "chain lattices C(p,q)");
  ct->require_subcommand(1);
  auto* ct_build = ct->add_subcommand("build", "construct C(p,q)");
  std::string ct_p, ct_q;
  bool ct_gram = false, ct_norms = false;
  ct_build->add_option("p", ct_p)->required();
  ct_build->add_option("q", ct_q)->required();
  ct_build->add_flag("--gram", ct_gram, "print the Gram matrix");
  ct_build->add_flag("--norms", ct_norms, "print the vertex norms");
  auto* ct_rec = ct->add_subcommand("recover", "recognize a chain lattice");
  std::string ct_rec_gram;
  ct_rec->add_option("--gram", ct_rec_gram, "JSON Gram matrix file")->required();

  // cm enum / basis
  auto* cm = app.add_subcommand("cm", "changemaker vectors");
  cm->require_subcommand(1);
  auto* cm_enum = cm->add_subcommand("enum", "enumerate changemakers");
  long cm_len = 0;
  std::string cm_norm_max;
  cm_enum->add_option("--len", cm_len, "length")->required();
  cm_enum->add_option("--norm-max", cm_norm_max, "norm bound")->required();
  auto* cm_basis = cm->add_subcommand("basis", "standard complement basis");
  std::vector<std::string> cm_sigma;
  cm_basis->add_option("sigma", cm_sigma, "changemaker entries")->required();

  // iso
  auto* iso = app.add_subcommand("iso", "decide lattice isometry");
  std::string iso_g1, iso_g2;
  iso->add_option("--gram1", iso_g1, "JSON Gram matrix file")->required();
  iso->add_option("--gram2", iso_g2, "JSON Gram matrix file")->required();

  // classify
  auto* cls = app.add_subcommand("classify", "family membership of (p,q)");
  std::string cls_p, cls_q;
  cls->add_option("p", cls_p)->required();
  cls->add_option("q", cls_q)->required();

  // verify-tables
  auto* vt = app.add_subcommand("verify-tables", "check the certified rows");
  long vt_smax = 4, vt_tmax = 4;
  vt->add_option("--s-max", vt_smax, "largest s parameter");
  vt->add_option("--t-max", vt_tmax, "largest t parameter");

  // search
  auto* se = app.add_subcommand("search", "changemaker census");
  long se_len = 0;
  std::string se_norm_max, se_out, se_csv;
  se->add_option("--len", se_len, "maximum length")->required();
  se->add_option("--norm-max", se_norm_max, "norm bound")->required();
  se->add_option("--out", se_out, "output file (JSON lines); default stdout");
  se->add_option("--csv", se_csv, "also write a CSV summary to this file");

  // alexander
  auto* al = app.add_subcommand("alexander", "torsion coefficients");
  std::vector<std::string> al_sigma;
  al->add_option("sigma", al_sigma, "changemaker entries")->required();

  // allow --json after a subcommand name
  for (CLI::App* s : app.get_subcommands([](const CLI::App*) { return true; })) {
    s->fallthrough();
    for (CLI::App* s2 : s->get_subcommands([](const CLI::App*) { return true; }))
      s2->fallthrough();
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }

  if (cf_expand->parsed()) {
    if (cf_neg == cf_pos) throw domain_error("pass exactly one of --neg/--pos");
    auto [num, den] = parse_fraction(cf_frac);
    Rat x(num, den);
    std::vector<Int> cfs = cf_neg ? neg_expand(x) : pos_expand(x);
    if (as_json)
      std::cout << jints(cfs).dump() << "\n";
    else
      std::cout << plain_ints(cfs) << "\n";
    return 0;
  }
  if (cf_eval->parsed()) {
    if (ce_neg == ce_pos) throw domain_error("pass exactly one of --neg/--pos");
    std::vector<Int> cfs;
    for (const auto& s : cf_coeffs) cfs.push_back(parse_int(s));
    Rat x = ce_neg ? neg_eval(cfs) : pos_eval(cfs);
    if (as_json) {
      json j;
      j["num"] = jint(rat_num(x));
      j["den"] = jint(rat_den(x));
      std::cout << j.dump() << "\n";
    } else {
      std::cout << rat_num(x) << "/" << rat_den(x) << "\n";
    }
    return 0;
  }
  if (sv->parsed()) {
    GramLattice L(read_gram_file(sv_gram));
    const auto& vs = L.short_vectors(parse_int(sv_bound));
    if (as_json) {
      json a = json::array();
      for (const auto& [v, n] : vs) {
        json e;
        e["vector"] = jints(v);
        e["norm"] = jint(n);
        a.push_back(e);
      }
      std::cout << a.dump() << "\n";
    } else {
      for (const auto& [v, n] : vs)
        std::cout << plain_ints(v) << " : " << n << "\n";
    }
    return 0;
  }
  if (ct_build->parsed()) {
    CTypeLattice L = build_ctype(parse_int(ct_p), parse_int(ct_q));
    if (as_json) {
      json j;
      j["p"] = jint(L.p);
      j["q"] = jint(L.q);
      j["norms"] = jints(L.norms);
      j["gram"] = jmat(L.gram.gram());
      std::cout << j.dump() << "\n";
    } else if (ct_gram) {
      for (const Vec& row : L.gram.gram()) std::cout << plain_ints(row) << "\n";
    } else {
      std::cout << plain_ints(L.norms) << "\n";
    }
    return 0;
  }
  if (ct_rec->parsed()) {
    GramLattice L(read_gram_file(ct_rec_gram));
    auto pq = recover_pq(L);
    if (!pq) {
      std::cout << (as_json ? "null\n" : "not a chain lattice\n");
      return 1;
    }
    if (as_json) {
      json j;
      j["p"] = jint(pq->first);
      j["q"] = jint(pq->second);
      std::cout << j.dump() << "\n";
    } else {
      std::cout << pq->first << " " << pq->second << "\n";
    }
    return 0;
  }
  if (cm_enum->parsed()) {
    auto all = enumerate_changemakers(static_cast<int>(cm_len),
                                      parse_int(cm_norm_max));
    if (as_json) {
      json a = json::array();
      for (const Sigma& s : all) a.push_back(jints(s));
      std::cout << a.dump() << "\n";
    } else {
      for (const Sigma& s : all) std::cout << plain_ints(s) << "\n";
    }
    return 0;
  }
  if (cm_basis->parsed()) {
    Sigma s = parse_sigma(cm_sigma);
    StandardBasis sb = standard_basis(s);
    auto kind_name = [](BasisKind k) {
      switch (k) {
        case BasisKind::tight: return "tight";
        case BasisKind::just_right: return "just_right";
        default: return "gappy";
      }
    };
    if (as_json) {
      json a = json::array();
      for (size_t i = 0; i < sb.vectors.size(); ++i) {
        json e;
        e["vector"] = jints(sb.vectors[i]);
        e["kind"] = kind_name(sb.kinds[i]);
        e["gappy_indices"] = sb.gappy_indices[i];
        a.push_back(e);
      }
      std::cout << a.dump() << "\n";
    } else {
      for (size_t i = 0; i < sb.vectors.size(); ++i)
        std::cout << "v" << i + 1 << " = " << plain_ints(sb.vectors[i])
                  << "  [" << kind_name(sb.kinds[i]) << "]\n";
    }
    return 0;
  }
  if (iso->parsed()) {
    GramLattice L1(read_gram_file(iso_g1));
    GramLattice L2(read_gram_file(iso_g2));
    auto w = are_isometric(L1, L2);
    if (!w) {
      std::cout << "not isometric\n";
      return 1;
    }
    json j;
    j["isometric"] = true;
    j["witness"] = jmat(w->matrix);
    std::cout << j.dump() << "\n";
    return 0;
  }
  if (cls->parsed()) {
    auto fams = classify(parse_int(cls_p), parse_int(cls_q));
    json a = json::array();
    for (const auto& f : fams) a.push_back(family_json(f));
    if (as_json || !fams.empty())
      std::cout << a.dump() << "\n";
    else
      std::cout << "no family\n";
    return fams.empty() ? 1 : 0;
  }
  if (vt->parsed()) {
    bool all_ok = true;
    json report = json::array();
    for (const RowMeta& m : certified_rows()) {
      long s_hi = m.uses_s ? vt_smax : m.s_min;
      long t_hi = m.uses_t ? vt_tmax : m.t_min;
      for (long s = m.s_min; s <= s_hi; ++s)
        for (long t = m.t_min; t <= t_hi; ++t) {
          RowInstance row = make_row(m.id, s, t);
          std::string err = verify_row(row);
          bool ok = err.empty();
          all_ok = all_ok && ok;
          if (as_json) {
            json e;
            e["row"] = m.id;
            e["s"] = s;
            e["t"] = t;
            e["p"] = jint(row.p);
            e["q"] = jint(row.q);
            e["ok"] = ok;
            if (!ok) e["error"] = err;
            report.push_back(e);
          } else {
            std::cout << m.id << " s=" << s << " t=" << t << " (p=" << row.p
                      << ", q=" << row.q << ") "
                      << (ok ? "PASS" : "FAIL: " + err) << "\n";
          }
        }
    }
    if (as_json) std::cout << report.dump() << "\n";
    return all_ok ? 0 : 1;
  }
  if (se->parsed()) {
    auto census =
        exhaustive_search(static_cast<int>(se_len), parse_int(se_norm_max));
    std::ofstream outf;
    std::ostream* out = &std::cout;
    if (!se_out.empty()) {
      outf.open(se_out);
      if (!outf) throw domain_error("cannot write " + se_out);
      out = &outf;
    }
    for (const auto& rec : census) *out << census_json(rec).dump() << "\n";
    if (!se_csv.empty()) {
      std::ofstream csv(se_csv);
      if (!csv) throw domain_error("cannot write " + se_csv);
      csv << "sigma,norm,is_ctype,p,q,families\n";
      for (const auto& rec : census) {
        csv << "\"" << plain_ints(rec.sigma) << "\"," << rec.norm << ","
            << (rec.is_ctype ? 1 : 0) << ",";
        if (rec.is_ctype) csv << rec.p;
        csv << ",";
        if (rec.is_ctype) csv << rec.q;
        csv << ",\"";
        for (size_t i = 0; i < rec.families.size(); ++i) {
          const auto& f = rec.families[i];
          csv << (i ? ";" : "") << f.family;
          if (f.has_r) csv << "(r=" << f.r << ")";
        }
        csv << "\"\n";
      }
    }
    return 0;
  }
  if (al->parsed()) {
    Sigma s = parse_sigma(al_sigma);
    TorsionSequence ts = torsion_coefficients(s);
    AlexanderPolynomial a = alexander_polynomial(ts);
    long genus = static_cast<long>(a.b.size()) - 1;
    bool unit = coefficients_in_unit_range(a);
    if (as_json) {
      json j;
      j["sigma"] = jints(s);
      j["q"] = jint(ts.q);
      j["torsion"] = jints(ts.t);
      json co = json::object();
      for (size_t i = 0; i < a.b.size(); ++i)
        if (a.b[i] != 0) co[std::to_string(i)] = jint(a.b[i]);
      j["coeffs"] = co;
      j["genus"] = genus;
      j["unit_coefficients"] = unit;
      j["stabilization_bound"] = jint(ts.stabilization_bound);
      std::cout << j.dump() << "\n";
    } else {
      std::cout << "q = " << ts.q << "\n";
      std::cout << "torsion = " << plain_ints(ts.t) << "\n";
      std::cout << "coeffs =";
      for (size_t i = 0; i < a.b.size(); ++i)
        if (a.b[i] != 0) std::cout << " " << i << ":" << a.b[i];
      std::cout << "\n";
      std::cout << "genus = " << genus << "\n";
      std::cout << "unit coefficients = " << (unit ? "yes" : "no") << "\n";
      std::cout << "stabilization bound = " << ts.stabilization_bound << "\n";
    }
    return 0;
  }
  return 2;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const invariant_error& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 3;
  } catch (const domain_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 3;
  }
}
