// Command-line front end for the braid representation toolkit.
#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <json.hpp>

#include "fvb/braid.hpp"
#include "fvb/fox.hpp"
#include "fvb/presentation.hpp"
#include "fvb/rep.hpp"

using nlohmann::json;
using namespace fvb;

namespace {

struct CommonOpts {
  int n = 2;
  std::string mode = "fvb";
  std::string braid;
  std::string file;
  std::string format = "text";
};

std::vector<BraidWord> collect_braids(const CommonOpts& o) {
  std::vector<BraidWord> out;
  if (!o.braid.empty()) out.push_back(parse_braid(o.braid, o.n));
  if (!o.file.empty()) {
    std::ifstream in(o.file);
    if (!in) throw input_error("cannot open file: " + o.file);
    std::string line;
    while (std::getline(in, line)) {
      if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
      out.push_back(parse_braid(line, o.n));
    }
  }
  if (out.empty()) throw input_error("no braid given (use --braid or --file)");
  return out;
}

void add_common(CLI::App* cmd, CommonOpts& o, bool with_braid = true) {
  cmd->add_option("--n", o.n, "number of strands")->check(CLI::Range(2, 64));
  cmd->add_option("--mode", o.mode, "vb | fvb | gvb | wb | fwb");
  if (with_braid) {
    cmd->add_option("--braid", o.braid, "braid word, e.g. \"r1 s2^-1\"");
    cmd->add_option("--file", o.file, "file with one braid word per line");
  }
  cmd->add_option("--format", o.format, "text | json")
      ->check(CLI::IsMember({"text", "json"}));
}

json relation_report_json(const RelationReport& r) {
  json checks = json::array();
  for (const RelationCheck& c : r.checks) {
    json j{{"family", std::string(family_name(c.family))},
           {"indices", c.indices},
           {"holds", c.holds},
           {"required", c.required}};
    if (!c.holds) j["witness"] = c.witness;
    checks.push_back(std::move(j));
  }
  return json{{"rep", r.rep_name},
              {"n", r.n},
              {"mode", std::string(mode_name(r.mode))},
              {"all_defining_hold", r.all_defining_hold()},
              {"forbidden_hold", r.forbidden_hold()},
              {"checks", std::move(checks)}};
}

json matrix_json(const RingMatrix& m) {
  json rows = json::array();
  for (int r = 0; r < m.rows(); ++r) {
    json row = json::array();
    for (int c = 0; c < m.cols(); ++c) {
      json terms = json::array();
      for (const auto& [e, coef] : m.at(r, c).terms())
        terms.push_back(json{{"exponents", e}, {"coeff", coef.str()}});
      row.push_back(std::move(terms));
    }
    rows.push_back(std::move(row));
  }
  return json{{"vars", m.vars()}, {"rows", m.rows()}, {"cols", m.cols()},
              {"entries", std::move(rows)}};
}

bool is_linear_selector(const std::string& s) {
  return s == "Theta" || s == "Delta" || s == "ThetaDelta";
}

RelationReport verify_linear(const LinearRep& rep, BraidMode mode) {
  auto witness = [](const RingMatrix& l, const RingMatrix& r) {
    for (int i = 0; i < l.rows(); ++i)
      for (int j = 0; j < l.cols(); ++j)
        if (!(l.at(i, j) == r.at(i, j)))
          return "entry (" + std::to_string(i + 1) + "," +
                 std::to_string(j + 1) + "): " + l.at(i, j).str() + " vs " +
                 r.at(i, j).str();
    return std::string();
  };
  return verify_relations(
      rep.name, rep.n, mode,
      [&](const BraidWord& b) { return apply_linear(rep, b); }, witness);
}

int run(int argc, char** argv) {
  CLI::App app{"braid group representation toolkit"};
  app.require_subcommand(1);

  std::string rep_sel = "theta";
  std::string rewrite_to = "lambda";

  CommonOpts o;
  CLI::App* c_parse = app.add_subcommand("parse", "echo the normalized braid");
  add_common(c_parse, o);

  CLI::App* c_act =
      app.add_subcommand("act", "endomorphism image of a braid");
  add_common(c_act, o);
  c_act->add_option("--rep", rep_sel, "representation selector");

  CLI::App* c_verify =
      app.add_subcommand("verify", "check the defining relations");
  add_common(c_verify, o, false);
  c_verify->add_option("--rep", rep_sel, "representation selector");

  CLI::App* c_kernel =
      app.add_subcommand("kernel-check", "is the image the identity?");
  add_common(c_kernel, o);
  c_kernel->add_option("--rep", rep_sel, "representation selector");

  CLI::App* c_rewrite =
      app.add_subcommand("rewrite", "rewrite in subgroup generators");
  add_common(c_rewrite, o);
  c_rewrite->add_option("--to", rewrite_to, "lambda | x | abc")
      ->check(CLI::IsMember({"lambda", "x", "abc"}));

  CLI::App* c_matrix = app.add_subcommand("matrix", "image matrix of a braid");
  add_common(c_matrix, o);
  c_matrix->add_option("--rep", rep_sel, "Theta | Delta | ThetaDelta");

  CLI::App* c_inv = app.add_subcommand(
      "invariant", "closed-braid group: presentation and abelianization");
  add_common(c_inv, o);

  CLI::App* c_switch =
      app.add_subcommand("switch-check", "verify the switch equations");
  add_common(c_switch, o, false);

  CLI::App* c_gauss = app.add_subcommand(
      "gauss-image", "permutation pair and z-residuals of a braid");
  add_common(c_gauss, o);

  CLI::App* c_gens = app.add_subcommand(
      "normal-gens", "normal generators of the pure-and-Rabenda intersection");
  add_common(c_gens, o, false);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);  // --help
    app.exit(e);
    return 2;
  }

  const bool js = o.format == "json";
  BraidMode mode = parse_mode(o.mode);

  if (c_parse->parsed()) {
    json out = json::array();
    for (const BraidWord& b : collect_braids(o)) {
      BraidWord r = free_reduce_braid(b, mode);
      if (js)
        out.push_back(json{{"braid", braid_str(r)}, {"n", r.n}});
      else
        std::cout << braid_str(r) << "\n";
    }
    if (js) std::cout << out.dump(2) << "\n";
    return 0;
  }

  if (c_verify->parsed()) {
    RelationReport report =
        is_linear_selector(rep_sel)
            ? verify_linear(make_linear(rep_sel, o.n), mode)
            : verify_defining_relations(make_representation(rep_sel, o.n),
                                        mode);
    if (js)
      std::cout << relation_report_json(report).dump(2) << "\n";
    else
      std::cout << report.str();
    return report.all_defining_hold() ? 0 : 1;
  }

  if (c_switch->parsed()) {
    SwitchReport r = switch_axiom_check();
    if (js)
      std::cout << json{{"yang_baxter", r.yang_baxter},
                        {"v_involution", r.v_involution},
                        {"mixed", r.mixed},
                        {"all_hold", r.all_hold()}}
                       .dump(2)
                << "\n";
    else
      std::cout << r.str();
    return r.all_hold() ? 0 : 1;
  }

  if (c_gens->parsed()) {
    json out = json::array();
    for (const BraidWord& g : normal_generators_intersection(o.n, mode)) {
      if (js)
        out.push_back(braid_str(g));
      else
        std::cout << braid_str(g) << "\n";
    }
    if (js) std::cout << out.dump(2) << "\n";
    return 0;
  }

  std::vector<BraidWord> braids = collect_braids(o);
  json out = json::array();
  int exit_code = 0;

  for (const BraidWord& b : braids) {
    if (c_act->parsed()) {
      Endomorphism e = make_representation(rep_sel, o.n).of(b);
      if (js) {
        json images;
        for (const auto& [sym, w] : e.images())
          images[e.alphabet()->name(sym)] = w.str();
        out.push_back(json{{"braid", braid_str(b)}, {"images", images}});
      } else {
        std::cout << e.str() << "\n";
      }
    } else if (c_kernel->parsed()) {
      bool id;
      if (is_linear_selector(rep_sel))
        id = apply_linear(make_linear(rep_sel, o.n), b).is_identity();
      else
        id = make_representation(rep_sel, o.n).of(b).is_identity();
      if (!id) exit_code = 1;
      if (js)
        out.push_back(json{{"braid", braid_str(b)}, {"identity", id}});
      else
        std::cout << (id ? "identity" : "non-identity") << "\n";
    } else if (c_rewrite->parsed()) {
      if (rewrite_to == "x") {
        XWord xw = rewrite_to_x(b);
        if (js)
          out.push_back(json{{"braid", braid_str(b)}, {"x", x_str(xw)}});
        else
          std::cout << x_str(xw) << "\n";
      } else {
        LambdaWord lw = rewrite_to_lambda(b, mode);
        if (rewrite_to == "lambda") {
          if (js)
            out.push_back(
                json{{"braid", braid_str(b)}, {"lambda", lambda_str(lw)}});
          else
            std::cout << lambda_str(lw) << "\n";
        } else {  // abc (3-strand pure subgroup coordinates)
          Word w = to_abc(lw);
          std::string nf = fvp3_str(fvp3_normal_form(w));
          if (js)
            out.push_back(json{{"braid", braid_str(b)},
                               {"word", w.str()},
                               {"normal_form", nf}});
          else
            std::cout << w.str() << "\n" << "normal form: " << nf << "\n";
        }
      }
    } else if (c_matrix->parsed()) {
      RingMatrix m = apply_linear(make_linear(rep_sel, o.n), b);
      if (js)
        out.push_back(json{{"braid", braid_str(b)}, {"matrix", matrix_json(m)}});
      else
        std::cout << m.str() << "\n";
    } else if (c_inv->parsed()) {
      Presentation p = tietze_simplify(link_group(b));
      AbelianInvariants inv = abelianization(p);
      if (js) {
        json rels = json::array();
        for (const Word& r : p.relators) rels.push_back(r.str());
        json tors = json::array();
        for (const Int& d : inv.torsion) tors.push_back(d.str());
        out.push_back(json{{"braid", braid_str(b)},
                           {"generators", p.generators},
                           {"relators", rels},
                           {"free_rank", inv.free_rank},
                           {"torsion", tors},
                           {"abelianization", inv.str()}});
      } else {
        std::cout << p.str() << "\n" << inv.str() << "\n";
      }
    } else if (c_gauss->parsed()) {
      GaussImage g = gauss_image(b);
      if (js)
        out.push_back(json{{"braid", braid_str(b)},
                           {"on_x", g.on_x.str()},
                           {"on_y", g.on_y.str()},
                           {"z_residual", g.z_residual},
                           {"identity", g.is_identity()}});
      else
        std::cout << "x: " << g.on_x.str() << "\ny: " << g.on_y.str()
                  << "\nz-residual: " << json(g.z_residual).dump() << "\n";
    }
  }
  if (js) std::cout << out.dump(2) << "\n";
  return exit_code;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const input_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const domain_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
