#include <fstream>
#include <iostream>
#include <string>

#include "CLI11.hpp"

#include "ctam/amalgam.hpp"
#include "ctam/error.hpp"
#include "ctam/presentation.hpp"
#include "ctam/report.hpp"

namespace {

constexpr int kOk = 0;
constexpr int kInputError = 2;
constexpr int kVerificationFailed = 3;

void write_output(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw ctam::InputError("cannot write '" + path + "'");
  out << text;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Curtis-Tits amalgams over finite fields: classification, verification, oracles"};
  std::string command, field, diagram_path, pointing_path, out_path = "-";
  std::uint64_t seed = 1;
  app.add_option("--command", command, "classify | verify | oracle | complete | emit")
      ->required()
      ->check(CLI::IsMember({"classify", "verify", "oracle", "complete", "emit"}));
  app.add_option("--field", field, "field as p^m, e.g. 2^2")->required();
  app.add_option("--diagram", diagram_path, "diagram file")->required();
  app.add_option("--pointing", pointing_path, "pointing file (default: trivial)");
  app.add_option("--seed", seed, "seed for sampled oracle pairs");
  app.add_option("--out", out_path, "output file, - for stdout");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kOk : kInputError;
  }

  try {
    const ctam::Field F = ctam::Field::parse(field);
    const ctam::Diagram d = ctam::load_diagram(diagram_path);
    const ctam::CoordGroup G(F);
    const ctam::Pointing delta = pointing_path.empty() ? ctam::Pointing{} : ctam::load_pointing(pointing_path, d, G);

    if (command == "emit") {
      if (F.order() < 4) throw ctam::DomainError("GF(" + F.name() + ") has fewer than 4 elements");
      write_output(out_path, ctam::emit_presentation(ctam::build_amalgam(d, delta, F)));
      return kOk;
    }

    ctam::RunResult res;
    if (command == "classify")
      res = ctam::classify_command(d, F);
    else if (command == "verify")
      res = ctam::verify_command(d, delta, F);
    else if (command == "oracle")
      res = ctam::oracle_command(d, F, seed);
    else
      res = ctam::complete_command(d, delta, F);
    write_output(out_path, ctam::dump(res.report));
    if (!res.verified) {
      std::cerr << "ctam: verification failed\n";
      return kVerificationFailed;
    }
    return kOk;
  } catch (const ctam::InputError& e) {
    std::cerr << "ctam: input error: " << e.what() << "\n";
    return kInputError;
  } catch (const ctam::DomainError& e) {
    std::cerr << "ctam: " << e.what() << "\n";
    return kInputError;
  } catch (const ctam::Error& e) {
    std::cerr << "ctam: " << e.what() << "\n";
    return kVerificationFailed;
  }
}
