#include <CLI11.hpp>

#include "dieudonne/errors.hpp"
#include "dmtool/commands.hpp"

namespace dmtool {

using namespace dieudonne;

namespace {

Json error_json(const std::string& kind, const std::string& message) {
  return Json{{"error", {{"kind", kind}, {"message", message}}}};
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Unitary Dieudonne modules over W(F_q)/p^N"};
  app.require_subcommand(1);

  std::string file;
  std::string file2;
  std::string out_path;
  std::string family = "odd";
  std::uint64_t p = 3;
  int a = 0;
  int b = 1;
  std::optional<int> k;
  std::optional<int> q;
  std::optional<int> precision;
  std::optional<int> max_iter;
  std::optional<int> side;
  std::optional<int> n_max;
  int bound = 5;

  auto add_out = [&](CLI::App* cmd) {
    cmd->add_option("--out", out_path, "Write the JSON result to this file");
  };
  auto add_file = [&](CLI::App* cmd) {
    cmd->add_option("file", file, "Module file")->required();
  };

  auto* validate_cmd = app.add_subcommand("validate", "Check every axiom of a module file");
  add_file(validate_cmd);
  add_out(validate_cmd);

  auto* gallery_cmd = app.add_subcommand("gallery", "Write a gallery module file");
  gallery_cmd->add_option("--family", family, "odd|even|parallel|deformed|flip10|realization");
  gallery_cmd->add_option("--a", a, "Signature a");
  gallery_cmd->add_option("--b", b, "Signature b");
  gallery_cmd->add_option("--k", k, "Deformation level");
  gallery_cmd->add_option("--q", q, "Claimed minimal height (realization)");
  gallery_cmd->add_option("--p", p, "Prime");
  gallery_cmd->add_option("--precision", precision, "Working precision N");
  add_out(gallery_cmd);

  auto* report_cmd = app.add_subcommand("report", "Full analysis of a module file");
  add_file(report_cmd);
  report_cmd->add_option("--max-iter", max_iter, "Chain iteration limit");
  add_out(report_cmd);

  auto* chain_cmd = app.add_subcommand("chain", "tau-chains T_i and S_i");
  add_file(chain_cmd);
  chain_cmd->add_option("--side", side, "0 or 1 (default both)")->check(CLI::Range(0, 1));
  chain_cmd->add_option("--max-iter", max_iter, "Chain iteration limit");
  add_out(chain_cmd);

  auto* height_cmd = app.add_subcommand("minheight", "Lambda and the minimal height");
  add_file(height_cmd);
  height_cmd->add_option("--max-iter", max_iter, "Chain iteration limit");
  add_out(height_cmd);

  auto* slope_cmd = app.add_subcommand("slope", "Iterated Frobenius valuations");
  add_file(slope_cmd);
  slope_cmd->add_option("--n-max", n_max, "Largest power sampled");
  add_out(slope_cmd);

  auto* compare_cmd =
      app.add_subcommand("compare-truncation", "Compare two presentations modulo p^k");
  compare_cmd->add_option("first", file, "Module file")->required();
  compare_cmd->add_option("second", file2, "Module file")->required();
  compare_cmd->add_option("--k", k, "Level")->required();
  add_out(compare_cmd);

  auto* witness_cmd =
      app.add_subcommand("cutoff-witness", "Congruent supersingular/deformed pair");
  witness_cmd->add_option("--a", a, "Signature a")->required();
  witness_cmd->add_option("--b", b, "Signature b")->required();
  witness_cmd->add_option("--p", p, "Prime");
  witness_cmd->add_option("--precision", precision, "Working precision N");
  add_out(witness_cmd);

  auto* verify_cmd = app.add_subcommand("verify-paper", "Sweep all signatures up to a bound");
  verify_cmd->add_option("--p", p, "Prime");
  verify_cmd->add_option("--bound", bound, "Largest a + b");
  verify_cmd->add_option("--precision", precision, "Working precision N");
  add_out(verify_cmd);

  std::vector<const char*> argv;
  argv.push_back("dmtool");
  for (const auto& s : args) argv.push_back(s.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kPass : kInputError;
  }

  auto emit = [&](const CommandResult& r) {
    const std::string text = dump(r.output);
    if (out_path.empty()) {
      out << text;
    } else {
      write_text_file(out_path, text);
    }
    return r.exit_code;
  };

  try {
    if (*validate_cmd) return emit(cmd_validate(read_module_file(file)));
    if (*gallery_cmd) {
      FamilySpec spec{family_from_string(family), a, b, k, q};
      return emit(cmd_gallery(spec, p, precision));
    }
    if (*report_cmd) return emit(cmd_report(read_module_file(file), max_iter));
    if (*chain_cmd) return emit(cmd_chain(read_module_file(file), side, max_iter));
    if (*height_cmd) return emit(cmd_minheight(read_module_file(file), max_iter));
    if (*slope_cmd) return emit(cmd_slope(read_module_file(file), n_max));
    if (*compare_cmd) {
      return emit(cmd_compare_truncation(read_module_file(file), read_module_file(file2), *k));
    }
    if (*witness_cmd) return emit(cmd_cutoff_witness(a, b, p, precision));
    if (*verify_cmd) return emit(cmd_verify_paper(p, bound, precision));
  } catch (const PrecisionExhausted& e) {
    Json j = error_json("precision_exhausted", e.what());
    j["error"]["recommended_precision"] = e.recommended_precision();
    err << j.dump() << "\n";
    return kPrecisionExhausted;
  } catch (const InputError& e) {
    err << error_json("input", e.what()).dump() << "\n";
    return kInputError;
  } catch (const std::invalid_argument& e) {
    err << error_json("input", e.what()).dump() << "\n";
    return kInputError;
  } catch (const std::domain_error& e) {
    err << error_json("domain", e.what()).dump() << "\n";
    return kFailure;
  } catch (const NonStabilization& e) {
    err << error_json("non_stabilization", e.what()).dump() << "\n";
    return kFailure;
  } catch (const std::exception& e) {
    err << error_json("failure", e.what()).dump() << "\n";
    return kFailure;
  }
  return kInputError;
}

}  // namespace dmtool
