#include "eqc/cli.hpp"

#include "eqc/grassmann.hpp"
#include "eqc/lie_catalog.hpp"
#include "eqc/report.hpp"
#include "eqc/serialize.hpp"

#include "CLI11.hpp"

#include <fstream>
#include <iostream>
#include <sstream>

namespace eqc {

namespace {

struct InputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

void add_common(CLI::App* sub, RunConfig& cfg, std::string& format) {
  sub->add_option("--max-degree,-D", cfg.max_degree, "Largest degree to compute")->check(CLI::NonNegativeNumber);
  sub->add_option("--format", format, "Output format")->check(CLI::IsMember({"line", "text", "json"}));
  sub->add_option("--out,-o", cfg.out, "Write the result to this file");
}

std::string render_hilbert(const HilbertTable& t, const std::string& label, Format f) {
  switch (f) {
    case Format::Json:
      return hilbert_to_json(t, label).dump(2) + "\n";
    case Format::Text:
      return hilbert_to_text(t, label);
    case Format::Line:
      break;
  }
  return to_string(t) + "\n";
}

std::string render_cohomology(const CohomologyReport& r, const std::string& label, Format f) {
  switch (f) {
    case Format::Json:
      return cohomology_to_json(r, label).dump(2) + "\n";
    case Format::Text:
      return cohomology_to_text(r, label);
    case Format::Line:
      break;
  }
  std::string s = to_string(r.table) + "\n";
  for (int d = 0; d < static_cast<int>(r.representatives.size()); ++d)
    for (const auto& x : r.representatives[d]) s += "H^" + std::to_string(d) + ": " + x.to_string() + "\n";
  return s;
}

GrassmannCase case_from(const RunConfig& cfg) {
  try {
    return parse_case(*cfg.case_spec);
  } catch (const std::invalid_argument& e) {
    throw InputError(std::string("rejected case: ") + e.what());
  }
}

std::string cmd_hilbert(const RunConfig& cfg) {
  if (cfg.file) {
    const QuotientPresentation p = presentation_from_json(parse_json(read_file(*cfg.file)));
    return render_hilbert(hilbert_function(p, cfg.max_degree.value_or(kDefaultFileDegree)), p.label, cfg.format);
  }
  const GrassmannCase c = case_from(cfg);
  const QuotientPresentation p = he_presentation(c);
  return render_hilbert(hilbert_function(p, cfg.max_degree.value_or(default_cutoff(c))), p.label, cfg.format);
}

std::string cmd_model(const RunConfig& cfg) {
  CohomologyOptions opts;
  opts.representatives = cfg.representatives;
  if (cfg.file || cfg.group) {
    const SullivanModel m = cfg.file ? model_from_json(parse_json(read_file(*cfg.file)))
                                     : universal_koszul_model(parse_group(*cfg.group));
    if (auto problem = validate(m)) throw InputError(*problem);
    const int D = cfg.max_degree.value_or(kDefaultFileDegree);
    return render_cohomology(cohomology(m, D, opts), m.label(), cfg.format);
  }
  const GrassmannCase c = case_from(cfg);
  const SullivanModel m = build_model(c);
  std::string label = m.label();
  if (c.variant == Variant::Unoriented) {
    // The unoriented space is the quotient by the deck group, so take invariants.
    opts.invariants = lift_to_model(m, covering_action(m.base(), c.equivariance == Equivariance::Ordinary));
    label = "invariants of the " + label;
  }
  return render_cohomology(cohomology(m, cfg.max_degree.value_or(default_cutoff(c)), opts), label, cfg.format);
}

int cmd_verify(const RunConfig& cfg, std::string& text) {
  std::vector<VerificationReport> reports;
  if (cfg.all_small) {
    for (const auto& c : small_cases())
      for (auto& r : verify_applicable(c, cfg.max_degree.value_or(default_cutoff(c)))) reports.push_back(std::move(r));
  } else {
    const GrassmannCase c = case_from(cfg);
    reports = verify_applicable(c, cfg.max_degree.value_or(default_cutoff(c)));
  }
  text = cfg.format == Format::Json ? batch_to_json(reports).dump(2) + "\n" : batch_to_text(reports);
  return all_pass(reports) ? kExitOk : kExitFailure;
}

void emit(const RunConfig& cfg, const std::string& text, std::ostream& out) {
  if (!cfg.out) {
    out << text;
    return;
  }
  std::ofstream file(*cfg.out, std::ios::binary);
  if (!file) throw InputError("cannot write '" + *cfg.out + "'");
  file << text;
}

}  // namespace

int run(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  try {
    if (cfg.max_degree && *cfg.max_degree < 0) throw InputError("max degree must be >= 0");
    std::string text;
    int status = kExitOk;
    switch (cfg.command) {
      case Command::Hilbert:
        if (!!cfg.file == !!cfg.case_spec) throw InputError("hilbert needs exactly one of --file, --case");
        text = cmd_hilbert(cfg);
        break;
      case Command::Model:
        if (!!cfg.file + !!cfg.case_spec + !!cfg.group != 1)
          throw InputError("model needs exactly one of --file, --case, --group");
        text = cmd_model(cfg);
        break;
      case Command::Verify:
        if (cfg.all_small == !!cfg.case_spec) throw InputError("verify needs exactly one of --case, --all-small");
        status = cmd_verify(cfg, text);
        break;
    }
    emit(cfg, text, out);
    return status;
  } catch (const InputError& e) {
    err << "error: " << e.what() << '\n';
  } catch (const ParseError& e) {
    err << "error: " << e.what() << '\n';
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << '\n';
    return kExitFailure;
  }
  return kExitInput;
}

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact cohomology of presented rings, pure Sullivan models and Grassmannian quotients", "eqc"};
  app.require_subcommand(1);
  RunConfig cfg;
  std::string format = "line";

  auto* hilbert = app.add_subcommand("hilbert", "Hilbert function of a presented ring");
  hilbert->add_option("--file,-f", cfg.file, "Presentation JSON file");
  hilbert->add_option("--case,-c", cfg.case_spec, "Case, e.g. \"n=1,k=1,a=0,b=0,two-sided\"");
  add_common(hilbert, cfg, format);

  auto* model = app.add_subcommand("model", "Cohomology of a pure Sullivan model");
  model->add_option("--file,-f", cfg.file, "Model JSON file");
  model->add_option("--case,-c", cfg.case_spec, "Case, e.g. \"n=1,k=1,a=0,b=0,two-sided\"");
  model->add_option("--group,-g", cfg.group, "Universal Koszul model of a group, e.g. \"SO(4)\"");
  model->add_flag("--representatives,-r", cfg.representatives, "List cocycle representatives");
  add_common(model, cfg, format);

  auto* verify = app.add_subcommand("verify", "Compare model and presentation pipelines");
  verify->add_option("--case,-c", cfg.case_spec, "Case to verify");
  verify->add_flag("--all-small", cfg.all_small, "Every case with n, k <= 2");
  add_common(verify, cfg, format);

  std::vector<std::string> rev(args.rbegin(), args.rend());
  if (!rev.empty()) rev.pop_back();  // program name
  try {
    app.parse(rev);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kExitInput;
  }
  if (hilbert->parsed()) cfg.command = Command::Hilbert;
  if (model->parsed()) cfg.command = Command::Model;
  if (verify->parsed()) {
    cfg.command = Command::Verify;
    if (format == "line") format = "text";
  }
  cfg.format = format == "json" ? Format::Json : format == "text" ? Format::Text : Format::Line;
  return run(cfg, out, err);
}

}  // namespace eqc
