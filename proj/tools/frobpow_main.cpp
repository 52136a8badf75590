#include <cstdlib>
#include <fstream>
#include <iostream>

#include <CLI11.hpp>

#include "frobpow/config.hpp"
#include "frobpow/session.hpp"

using namespace frobpow;

namespace {

struct CommonArgs {
  std::string session_path;
  std::string ring, ideal, elem, out_path, csv_path, test_element, sop, T_ideal;
  std::string extension;
  int emax = 3, tmax = 3, test_power = 2, e_val = -1, e_min = 1, e_max_flag = -1;
  int64_t t_param = 1;
  uint64_t q_val = 0;
  bool text = false;
  bool no_timing = false;
  bool bracket = false;
  std::string cert;
};

void add_common(CLI::App* cmd, CommonArgs& a) {
  cmd->add_option("--session", a.session_path, "session file providing named objects");
  cmd->add_option("--out", a.out_path, "write the JSON report to this path");
  cmd->add_flag("--text", a.text, "human-readable output instead of JSON");
  cmd->add_flag("--no-timing", a.no_timing, "omit timing from reports");
}

void add_strategy(CLI::App* cmd, CommonArgs& a) {
  cmd->add_option("--test-element", a.test_element,
                  "unit | jacobian | explicit polynomial");
  cmd->add_option("--test-power", a.test_power, "power N applied to the test element");
}

json cli_task(const std::string& command, const CommonArgs& a) {
  json task{{"command", command}, {"name", command}};
  if (!a.ring.empty()) task["ring"] = a.ring;
  if (!a.ideal.empty()) task["ideal"] = a.ideal;
  if (!a.elem.empty()) task["elem"] = a.elem;
  if (!a.test_element.empty()) task["test_element"] = a.test_element;
  if (!a.sop.empty()) task["sop"] = a.sop;
  if (!a.T_ideal.empty()) task["T"] = a.T_ideal;
  if (!a.extension.empty()) task["extension"] = a.extension;
  if (!a.cert.empty()) task["cert"] = a.cert;
  task["test_power"] = a.test_power;
  task["emax"] = a.emax;
  task["tmax"] = a.tmax;
  task["e_min"] = a.e_min;
  task["e_max"] = a.e_max_flag > 0 ? a.e_max_flag : a.emax;
  task["t"] = a.t_param;
  if (a.bracket) task["bracket"] = true;
  if (a.q_val) task["q"] = a.q_val;
  if (a.e_val >= 0) task["e"] = a.e_val;
  return task;
}

int emit(const json& envelope, const CommonArgs& a) {
  std::string body = envelope.dump(2) + "\n";
  if (a.text) {
    std::string line = envelope.at("command").get<std::string>();
    line += envelope.at("ok").get<bool>() ? ": pass" : ": FAIL";
    if (envelope.at("conditional").get<bool>()) line += " [conditional]";
    std::cout << line << "\n" << envelope.at("result").dump(2) << "\n";
  } else {
    std::cout << body;
  }
  if (!a.out_path.empty()) {
    std::ofstream f(a.out_path, std::ios::binary);
    if (!f) throw Error(Error::Kind::io, "cannot write " + a.out_path);
    f << body;
  }
  if (!a.csv_path.empty() && envelope.at("result").contains("csv")) {
    std::ofstream f(a.csv_path, std::ios::binary);
    if (!f) throw Error(Error::Kind::io, "cannot write " + a.csv_path);
    f << envelope.at("result").at("csv").get<std::string>();
  }
  return envelope.at("ok").get<bool>() ? 0 : 2;
}

int run_one(const std::string& command, const CommonArgs& a) {
  SessionFile session;
  if (!a.session_path.empty()) session = SessionFile::load(a.session_path);
  json task = cli_task(command, a);
  json envelope = run_task(session, task, !a.no_timing);
  return emit(envelope, a);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"frobpow: prime-characteristic ideal calculus, Frobenius and "
               "tight closure, Hilbert-Kunz tables, flat base-change checks"};
  app.require_subcommand(1);

  if (const char* cap = std::getenv("FROBPOW_CAP")) {
    config().gb_degree_cap = std::strtoll(cap, nullptr, 10);
  }
  int64_t cap_flag = 0;
  app.add_option("--cap", cap_flag, "Groebner degree cap (overrides FROBPOW_CAP)");

  std::map<std::string, CommonArgs> args;
  std::vector<std::pair<std::string, std::string>> simple = {
      {"gb", "reduced Groebner basis of an ideal"},
      {"nf", "normal form of an element"},
      {"member", "ideal membership via normal form"},
      {"fpower", "Frobenius bracket power I^[q]"},
      {"fclosure", "Frobenius closure membership search"},
      {"tclosure", "tight closure verdict (or candidate without --elem)"},
      {"hk", "Hilbert-Kunz table"},
      {"tau", "truncated test ideals along an s.o.p."},
      {"socle", "socle basis and irreducibility"},
      {"dim", "Krull dimension"},
      {"hilbert", "Hilbert series and multiplicity"},
  };
  for (auto& [name, desc] : simple) {
    CLI::App* cmd = app.add_subcommand(name, desc);
    CommonArgs& a = args[name];
    add_common(cmd, a);
    cmd->add_option("--ring", a.ring, "ring name or GF(p)[...] literal");
    if (name != "dim" && name != "tau" && name != "hilbert")
      cmd->add_option("--ideal", a.ideal, "ideal name or comma-separated generators")
          ->required();
    else
      cmd->add_option("--ideal", a.ideal, "ideal name or comma-separated generators");
    if (name == "nf" || name == "member" || name == "fclosure")
      cmd->add_option("--elem", a.elem, "element")->required();
    if (name == "tclosure") {
      cmd->add_option("--elem", a.elem, "element (omit for the closure candidate)");
      cmd->add_option("--cert", a.cert, "test exponent certificate: 'regular'");
    }
    if (name == "fpower") {
      cmd->add_option("--q", a.q_val, "bracket exponent q = p^e");
      cmd->add_option("--e", a.e_val, "exponent e (q = p^e)");
    }
    if (name == "tau") cmd->add_option("--sop", a.sop, "system of parameters")->required();
    if (name == "hk") cmd->add_option("--csv", a.csv_path, "write the CSV table here");
    if (name == "fclosure" || name == "tclosure" || name == "hk" || name == "tau")
      cmd->add_option("--emax", a.emax, "largest e, q = p^e");
    if (name == "tau") cmd->add_option("--tmax", a.tmax, "largest truncation level");
    if (name == "tclosure" || name == "tau") add_strategy(cmd, a);
  }

  CLI::App* verify = app.add_subcommand("verify", "paper-identity verification suites");
  verify->require_subcommand(1);
  std::vector<std::pair<std::string, std::string>> verbs = {
      {"prop5.7", "finite-q length identity and HK multiplicativity"},
      {"cor5.8", "row-wise Kunz inequality"},
      {"thm4.1", "tightly closed extension evidence"},
      {"thm5.1", "strong test ideal instance"},
      {"prop5.9", "test exponent transfer"},
      {"prop4.4", "truncated test ideal extension"},
      {"finj", "F-injectivity evidence along an s.o.p."},
      {"frat", "F-rationality evidence along an s.o.p."},
  };
  for (auto& [verb, desc] : verbs) {
    CLI::App* cmd = verify->add_subcommand(verb, desc);
    CommonArgs& a = args["verify-" + verb];
    add_common(cmd, a);
    add_strategy(cmd, a);
    cmd->add_option("--emax", a.emax, "largest e, q = p^e");
    cmd->add_option("--e-min", a.e_min, "first e");
    cmd->add_option("--e-max", a.e_max_flag, "last e (defaults to emax)");
    if (verb == "prop5.7" || verb == "cor5.8" || verb == "thm4.1" ||
        verb == "prop5.9" || verb == "prop4.4")
      cmd->add_option("--extension", a.extension, "extension name from the session")
          ->required();
    if (verb == "prop5.7" || verb == "thm4.1" || verb == "thm5.1" || verb == "prop5.9")
      cmd->add_option("--ideal", a.ideal, "base ideal")->required();
    if (verb == "thm5.1") {
      cmd->add_option("--ring", a.ring, "ring")->required();
      cmd->add_option("--T", a.T_ideal, "candidate strong test ideal")->required();
    }
    if (verb == "prop5.9")
      cmd->add_option("--elem", a.elem, "test element c")->required();
    if (verb == "prop4.4") {
      cmd->add_option("--sop", a.sop, "s.o.p. of the base ring")->required();
      cmd->add_option("--tmax", a.tmax, "largest truncation level");
    }
    if (verb == "finj" || verb == "frat") {
      cmd->add_option("--ring", a.ring, "ring")->required();
      cmd->add_option("--sop", a.sop, "system of parameters")->required();
    }
    if (verb == "thm4.1") {
      cmd->add_option("--t", a.t_param, "power of z adjoined");
      cmd->add_flag("--bracket", a.bracket, "insist t is a power of p");
    }
  }

  CLI::App* run = app.add_subcommand("run", "run every task in a session file");
  CommonArgs& ra = args["run"];
  std::string run_session_path;
  std::string task_filter;
  bool parallel = false;
  run->add_option("session", run_session_path, "session file")->required();
  run->add_option("--task", task_filter, "run only tasks matching this name/command");
  run->add_flag("--parallel", parallel, "run independent tasks concurrently");
  run->add_option("--out", ra.out_path, "write the JSON report array here");
  run->add_flag("--text", ra.text, "summary lines instead of JSON");
  run->add_flag("--no-timing", ra.no_timing, "omit timing from reports");

  CLI11_PARSE(app, argc, argv);
  if (cap_flag > 0) config().gb_degree_cap = cap_flag;

  try {
    if (run->parsed()) {
      SessionFile session = SessionFile::load(run_session_path);
      RunOptions opts;
      if (!task_filter.empty()) opts.task_filter = task_filter;
      opts.parallel = parallel;
      opts.with_timing = !ra.no_timing;
      opts.text = ra.text;
      RunResult rr = run_session(session, opts);
      std::string body = rr.envelopes.dump(2) + "\n";
      if (ra.text) std::cout << rr.text;
      else std::cout << body;
      if (!ra.out_path.empty()) {
        std::ofstream f(ra.out_path, std::ios::binary);
        if (!f) throw Error(Error::Kind::io, "cannot write " + ra.out_path);
        f << body;
      }
      return rr.exit_code;
    }
    for (auto& [name, a] : args) {
      if (name == "run") continue;
      CLI::App* cmd = nullptr;
      if (name.rfind("verify-", 0) == 0)
        cmd = verify->get_subcommand(name.substr(7));
      else
        cmd = app.get_subcommand(name);
      if (cmd && cmd->parsed()) return run_one(name, a);
    }
    std::cerr << "no subcommand executed\n";
    return 1;
  } catch (const Error& e) {
    std::cerr << "error [" << e.code() << "]: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error [E_INTERNAL]: " << e.what() << "\n";
    return 1;
  }
}
