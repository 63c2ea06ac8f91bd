#include "cli.hpp"

#include <CLI11.hpp>

#include <ostream>
#include <sstream>

#include "errors.hpp"
#include "lines.hpp"
#include "serial.hpp"

namespace jetgeom::cli {

namespace {

LineSpec parse_line_arg(const std::string& s) {
  auto semi = s.find(';');
  if (semi == std::string::npos) fail(Errc::Parse, "line must be given as \"p0,..,pN;d0,..,dN\"");
  return LineSpec(parse_point(s.substr(0, semi)), parse_point(s.substr(semi + 1)));
}

Json point_json(const RatVec& p) {
  Json out = Json::array();
  for (const Rat& x : p) out.push_back(rat_str(x));
  return out;
}

Json chart_section(const Chart& chart, int order_used) {
  Json j;
  j["n"] = chart.n;
  j["c"] = chart.c;
  j["K"] = order_used;
  return j;
}

Json fubini_section(const FubiniReport& rep) {
  Json j;
  j["holds"] = rep.holds;
  j["residual"] = rep.residual_dimension;
  return j;
}

Json pencil_section(const PencilClass& pc) {
  Json j;
  j["tag"] = pencil_tag_name(pc.tag);
  j["partition"] = pc.partition;
  j["degenerateDual"] = pc.degenerate_dual;
  return j;
}

Json witness_section(const Evidence& ev) {
  Json j;
  if (ev.fubini.holds) {
    Json rho = Json::array();
    for (const RatMat& m : ev.fubini.rho) rho.push_back(matrix_to_json(m));
    j["rho"] = rho;
  } else {
    j["rho"] = nullptr;
  }
  if (ev.ci && ev.ci->passes) {
    Json sigma = Json::array();
    for (const RatMat& m : ev.ci->sigma) sigma.push_back(matrix_to_json(m));
    j["sigma"] = sigma;
  } else {
    j["sigma"] = nullptr;
  }
  return j;
}

void emit(const Json& report, const std::string& text, bool structured, std::ostream& out) {
  if (structured)
    out << report.dump(2) << "\n";
  else
    out << text;
}

std::string partition_str(const std::vector<int>& parts) {
  std::string s = "{";
  for (size_t i = 0; i < parts.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(parts[i]);
  }
  return s + "}";
}

struct AnalyzeArgs {
  std::string input;
  std::string point;
  int order = 5;
  std::string format = "text";
  bool check_general = false;
};

int cmd_analyze(const AnalyzeArgs& a, std::ostream& out, bool fubini_only) {
  InputObject obj = parse_input_file(a.input);
  RatVec point;
  Chart chart;
  if (std::holds_alternative<VarietySpec>(obj)) {
    if (a.point.empty()) fail(Errc::Parse, "variety input needs --point");
    point = parse_point(a.point);
    chart = chart_from_implicit(std::get<VarietySpec>(obj), point, a.order);
  } else {
    chart = std::get<Chart>(obj);
  }
  ClassifyResult res;
  if (fubini_only) {
    // only the chart, forms, and Fubini outcome; no pencil or class routing
    res.evidence.chart = chart;
    res.evidence.forms = fundamental_forms(chart, std::min(chart.order, 5));
    res.evidence.fubini = fubini_test(res.evidence.forms);
    if (a.check_general) {
      if (auto w = generality_warning(chart)) res.evidence.warnings.push_back(*w);
    }
  } else {
    res = theorem_classify_chart(chart, a.check_general);
  }
  const Evidence& ev = res.evidence;

  Json rep;
  rep["command"] = fubini_only ? "fubini" : "analyze";
  rep["input"] = a.input;
  rep["point"] = point_json(point);
  rep["chart"] = chart_section(ev.chart, ev.forms.K);
  Json forms;
  forms["dimF2"] = ev.forms.form_space(2).dim();
  forms["dimF3resid"] = ev.fubini.residual_dimension;
  rep["forms"] = forms;
  rep["fubini"] = fubini_section(ev.fubini);
  if (!fubini_only) {
    rep["pencil"] = pencil_section(ev.pclass);
    Json cls;
    cls["tag"] = theorem_tag_name(res.tag);
    cls["number"] = static_cast<int>(res.tag);
    rep["class"] = cls;
  }
  rep["witnesses"] = witness_section(ev);
  rep["diagnostics"] = ev.diagnostics;
  rep["warnings"] = ev.warnings;

  std::ostringstream text;
  text << "input: " << a.input << "\n";
  if (!point.empty()) text << "point: " << ratvec_str(point) << "\n";
  text << "chart: n=" << ev.chart.n << " c=" << ev.chart.c << " K=" << ev.forms.K << "\n";
  text << "dim |F2| = " << ev.forms.form_space(2).dim()
       << ", residual dim |F3|/(|F2|)_3 = " << ev.fubini.residual_dimension << "\n";
  text << "Fubini hypothesis: " << (ev.fubini.holds ? "holds" : "fails") << "\n";
  if (!fubini_only) {
    text << "pencil: " << pencil_tag_name(ev.pclass.tag);
    if (!ev.pclass.partition.empty()) text << " partition " << partition_str(ev.pclass.partition);
    text << (ev.pclass.degenerate_dual ? ", degenerate dual" : ", nondegenerate dual") << "\n";
    text << "class: " << theorem_tag_name(res.tag) << " (" << static_cast<int>(res.tag) << ")\n";
  }
  for (const auto& d : ev.diagnostics) text << "diagnostic: " << d << "\n";
  for (const auto& w : ev.warnings) text << "warning: " << w << "\n";
  emit(rep, text.str(), a.format != "text", out);
  return 0;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"exact local invariants of projective varieties: fundamental forms, contact loci, "
               "pencil classification, normal bundle splitting"};
  app.require_subcommand(1);

  AnalyzeArgs analyze_args;
  CLI::App* analyze = app.add_subcommand("analyze", "classify a variety or chart from its local data");
  analyze->add_option("input", analyze_args.input, "variety or chart file")->required();
  analyze->add_option("--point", analyze_args.point, "homogeneous coordinates p0,p1,...");
  analyze->add_option("--order", analyze_args.order, "jet order (3..6)")->check(CLI::Range(3, 6));
  analyze->add_option("--format", analyze_args.format, "text | structured")
      ->check(CLI::IsMember({"text", "structured"}));
  analyze->add_flag("--check-general", analyze_args.check_general,
                    "warn when nearby sampled points have different form dimensions");

  AnalyzeArgs fubini_args;
  CLI::App* fubini = app.add_subcommand("fubini", "test whether |F3| lies in the ideal of |F2|");
  fubini->add_option("input", fubini_args.input, "variety or chart file")->required();
  fubini->add_option("--point", fubini_args.point, "homogeneous coordinates p0,p1,...");
  fubini->add_option("--order", fubini_args.order, "jet order (3..6)")->check(CLI::Range(3, 6));
  fubini->add_option("--format", fubini_args.format, "text | structured")
      ->check(CLI::IsMember({"text", "structured"}));

  std::string contact_input, contact_line, contact_format = "text";
  int contact_maxk = 6;
  CLI::App* contact = app.add_subcommand("contact", "contact order of a line with a variety");
  contact->add_option("input", contact_input, "variety file")->required();
  contact->add_option("--line", contact_line, "base;direction as p0,..,pN;d0,..,dN")->required();
  contact->add_option("--maxk", contact_maxk, "contact order cap")->check(CLI::Range(1, 64));
  contact->add_option("--format", contact_format, "text | structured")
      ->check(CLI::IsMember({"text", "structured"}));

  std::string pencil_input, pencil_format = "text";
  CLI::App* pencil = app.add_subcommand("pencil", "classify a pencil of quadrics given by matrices");
  pencil->add_option("input", pencil_input, "pencil file with symmetric A, B")->required();
  pencil->add_option("--format", pencil_format, "text | structured")
      ->check(CLI::IsMember({"text", "structured"}));

  std::string split_input, split_line, split_format = "text";
  CLI::App* splitting = app.add_subcommand("splitting", "normal bundle splitting type of a line on a hypersurface");
  splitting->add_option("input", split_input, "hypersurface file (single generator)")->required();
  splitting->add_option("--line", split_line, "two spanning points as p0,..;q0,..")->required();
  splitting->add_option("--format", split_format, "text | structured")
      ->check(CLI::IsMember({"text", "structured"}));

  int gen_class = 0;
  std::string gen_out, gen_lambda, gen_rho, gen_format = "text";
  std::string gen_R = "0", gen_U = "0", gen_V = "0", gen_W = "0";
  int gen_n = 3;
  CLI::App* gen = app.add_subcommand("gen", "generate a member of one of the seven output families");
  gen->add_option("class", gen_class, "output class 1..7")->required()->check(CLI::Range(1, 7));
  gen->add_option("-o,--output", gen_out, "output file")->required();
  gen->add_option("--n", gen_n, "dimension")->check(CLI::Range(2, 9));
  gen->add_option("--R", gen_R, "parameter R");
  gen->add_option("--U", gen_U, "parameter U");
  gen->add_option("--V", gen_V, "parameter V");
  gen->add_option("--W", gen_W, "parameter W");
  gen->add_option("--lambda", gen_lambda, "comma-separated eigenvalue parameters");
  gen->add_option("--rho", gen_rho, "comma-separated cubic witness parameters");
  gen->add_option("--format", gen_format, "text | structured")
      ->check(CLI::IsMember({"text", "structured"}));

  std::vector<const char*> argv;
  argv.push_back("jetgeom");
  for (const auto& s : args) argv.push_back(s.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? 0 : 1;
  }

  try {
    if (*analyze) return cmd_analyze(analyze_args, out, false);
    if (*fubini) return cmd_analyze(fubini_args, out, true);

    if (*contact) {
      InputObject obj = parse_input_file(contact_input);
      if (!std::holds_alternative<VarietySpec>(obj)) fail(Errc::Parse, "contact needs a variety file");
      const VarietySpec& spec = std::get<VarietySpec>(obj);
      LineSpec line = parse_line_arg(contact_line);
      ContactResult res = contact_order(spec, line, contact_maxk);
      Json rep;
      rep["command"] = "contact";
      rep["input"] = contact_input;
      rep["line"] = Json{{"base", point_json(line.base)}, {"dir", point_json(line.dir)}};
      rep["contact"] = Json{{"contained", res.contained}, {"order", res.contained ? Json(nullptr) : Json(res.order)}, {"maxK", contact_maxk}};
      std::ostringstream text;
      text << "input: " << contact_input << "\n";
      text << "line: base " << ratvec_str(line.base) << ", direction " << ratvec_str(line.dir) << "\n";
      if (res.contained)
        text << "contact: CONTAINED (the line lies in the variety)\n";
      else
        text << "contact: order " << res.order << " (cap " << contact_maxk << ")\n";
      emit(rep, text.str(), contact_format != "text", out);
      return 0;
    }

    if (*pencil) {
      QuadricPencil p = parse_pencil_file(pencil_input);
      PencilClass pc = pencil_classify(p);
      Json rep;
      rep["command"] = "pencil";
      rep["input"] = pencil_input;
      rep["pencil"] = pencil_section(pc);
      std::ostringstream text;
      text << "input: " << pencil_input << "\n";
      text << "pencil: " << pencil_tag_name(pc.tag);
      if (!pc.partition.empty()) text << " partition " << partition_str(pc.partition);
      text << (pc.degenerate_dual ? ", degenerate dual" : ", nondegenerate dual") << "\n";
      emit(rep, text.str(), pencil_format != "text", out);
      return 0;
    }

    if (*splitting) {
      InputObject obj = parse_input_file(split_input);
      if (!std::holds_alternative<VarietySpec>(obj)) fail(Errc::Parse, "splitting needs a variety file");
      const VarietySpec& spec = std::get<VarietySpec>(obj);
      if (spec.gens.size() != 1) fail(Errc::Parse, "splitting needs a hypersurface (exactly one generator)");
      LineSpec line = parse_line_arg(split_line);
      CoskunCheck chk = coskun_check(spec.gens[0], line);
      Json rep;
      rep["command"] = "splitting";
      rep["input"] = split_input;
      rep["line"] = Json{{"base", point_json(line.base)}, {"dir", point_json(line.dir)}};
      rep["splitting"] = Json{{"degrees", chk.split.degrees},
                              {"sum", chk.split.sum()},
                              {"sumOk", chk.sum_ok},
                              {"a1Negative", chk.a1_negative},
                              {"coversImpossible", chk.covers_impossible}};
      std::ostringstream text;
      text << "input: " << split_input << "\n";
      text << "splitting type: (";
      for (size_t i = 0; i < chk.split.degrees.size(); ++i)
        text << (i ? "," : "") << chk.split.degrees[i];
      text << "), sum " << chk.split.sum() << (chk.sum_ok ? " (= n-d)" : " (!= n-d)") << "\n";
      if (chk.a1_negative) text << "a1 < 0";
      else text << "a1 >= 0";
      text << (chk.covers_impossible ? "; degree >= n+1: deformations of the line cannot cover the hypersurface\n" : "\n");
      emit(rep, text.str(), split_format != "text", out);
      return 0;
    }

    if (*gen) {
      ExampleParams params;
      params.n = gen_n;
      params.R = rat_parse(gen_R);
      params.U = rat_parse(gen_U);
      params.V = rat_parse(gen_V);
      params.W = rat_parse(gen_W);
      if (!gen_lambda.empty()) params.lambda = parse_point(gen_lambda);
      if (!gen_rho.empty()) params.rho = parse_point(gen_rho);
      GeneratedExample ex = example_generate(gen_class, params);
      Json payload = ex.spec ? spec_to_json(*ex.spec) : chart_to_json(*ex.chart);
      write_text_file(gen_out, payload.dump(2) + "\n");
      Json rep;
      rep["command"] = "gen";
      rep["class"] = gen_class;
      rep["output"] = gen_out;
      rep["kind"] = ex.spec ? "variety" : "chart";
      rep["point"] = point_json(ex.suggested_point);
      std::ostringstream text;
      text << "wrote class-" << gen_class << (ex.spec ? " variety " : " chart ") << gen_out << "\n";
      if (!ex.suggested_point.empty()) text << "suggested point: " << ratvec_str(ex.suggested_point) << "\n";
      emit(rep, text.str(), gen_format != "text", out);
      return 0;
    }
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return e.usage_error() ? 1 : 2;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
  return 1;
}

}  // namespace jetgeom::cli
