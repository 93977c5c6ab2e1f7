#include <fstream>
#include <iostream>

#include "CLI11.hpp"

#include "bandq/io.hpp"

namespace {

void emit(const std::string& text, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << text << "\n";
  } else {
    std::ofstream out(out_path);
    if (!out) throw bandq::ParseError("cannot write " + out_path);
    out << text << "\n";
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"bandq: quiver presentations of integral band algebras"};
  app.require_subcommand(1);

  std::string input;
  std::string out_path;
  std::string idem_mode = "auto";
  int trunc_override = -1;
  int max_size = bandq::kMaxElements;

  auto add_common = [&](CLI::App* cmd) {
    cmd->add_option("input", input,
                    "constructor spec (e.g. b5, signs:2, rect:2x3, "
                    "prod(signs:1,signs:1)) or a JSON table file")
        ->required();
    cmd->add_option("-o,--output", out_path, "write the report to a file");
    cmd->add_option("--idempotents", idem_mode,
                    "idempotent lifting path: auto|generic|lrb-fast")
        ->check(CLI::IsMember({"auto", "generic", "lrb-fast"}));
    cmd->add_option("--truncation-override", trunc_override,
                    "override the truncation cutoff (expert use)");
    cmd->add_option("--max-size", max_size, "refuse bands larger than this");
  };

  CLI::App* analyze = app.add_subcommand("analyze", "band + lattice report");
  CLI::App* present =
      app.add_subcommand("present", "bound quiver presentation report");
  CLI::App* verify =
      app.add_subcommand("verify", "run the theorem-verification battery");
  CLI::App* cw = app.add_subcommand("cw", "CW left-regular-band theorem check");
  CLI::App* dot = app.add_subcommand("export-dot", "emit the quiver as DOT");
  for (auto* cmd : {analyze, present, verify, cw, dot}) add_common(cmd);

  CLI11_PARSE(app, argc, argv);

  try {
    bandq::MulTable t = bandq::build_from_spec(input);
    if (t.n > max_size)
      throw bandq::SizeLimit("band exceeds --max-size " +
                             std::to_string(max_size));
    bandq::PipelineOptions opt;
    opt.force_generic_idempotents = idem_mode == "generic";
    if (trunc_override > 0) opt.truncation_override = trunc_override;

    if (analyze->parsed()) {
      emit(bandq::analyze_report(t).dump(2), out_path);
    } else if (present->parsed()) {
      bandq::json rep = bandq::present_report(t, opt);
      emit(rep.dump(2), out_path);
      std::cerr << "relations:\n" << rep.at("relations_text").get<std::string>();
    } else if (verify->parsed()) {
      bandq::json rep = bandq::verify_report(t, opt);
      emit(rep.dump(2), out_path);
      if (!bandq::verify_all_passed(rep)) return 3;
    } else if (cw->parsed()) {
      bandq::json rep = bandq::cw_report_json(t, opt);
      emit(rep.dump(2), out_path);
      if (!rep.at("kernel_equals_sum_of_2paths").get<bool>()) return 3;
    } else if (dot->parsed()) {
      emit(bandq::quiver_dot_spec(t), out_path);
    }
  } catch (const bandq::CertificateFailure& e) {
    std::cerr << "certificate failure: " << e.what() << "\n";
    return 3;
  } catch (const bandq::TheoremViolation& e) {
    std::cerr << "theorem violation: " << e.what() << "\n";
    return 3;
  } catch (const bandq::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
