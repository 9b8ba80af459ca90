// qtop: persistent-homology classification of multiqubit entanglement.
//
//   qtop classify  (FILE | --preset NAME) [--normalize]
//   qtop barcode   (FILE | --preset NAME) [--render text|svg] [--out PATH]
//   qtop distances (FILE | --preset NAME)
//   qtop sample    --qubits N --count M --seed S [--workers W] --out PATH [--format csv|json]
//   qtop bound     --qubits N
//   qtop presets
//
// Exit status: 0 success, 1 bad input or I/O failure, 2 state not genuinely entangled.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <string>
#include <thread>

#include "CLI11.hpp"

#include "qtop/classification.hpp"
#include "qtop/io.hpp"

namespace {

constexpr int kExitBadInput = 1;
constexpr int kExitNotGenuine = 2;

struct StateInput {
  std::string path;
  std::string preset;
  bool normalize = false;

  void attach(CLI::App* cmd) {
    cmd->add_option("file", path, "State JSON file");
    cmd->add_option("--preset", preset, "Built-in reference state (see 'qtop presets')");
    cmd->add_flag("--normalize", normalize, "Rescale the file's amplitudes to unit norm");
  }

  qtop::PureState resolve() const {
    if (!preset.empty() && !path.empty()) throw qtop::StateFormatError("give either a file or --preset, not both");
    if (!preset.empty()) {
      if (auto s = qtop::preset(preset)) return *s;
      throw qtop::StateFormatError("unknown preset '" + preset + "'");
    }
    if (path.empty()) throw qtop::StateFormatError("no input: pass a state file or --preset NAME");
    return qtop::load_state_file(path, normalize);
  }
};

void write_output(const std::string& out_path, const std::string& text) {
  if (out_path.empty() || out_path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(out_path, std::ios::binary | std::ios::trunc);
  if (!out) throw std::runtime_error("cannot open '" + out_path + "' for writing");
  out << text;
  out.flush();
  if (!out) throw std::runtime_error("failed writing '" + out_path + "'");
}

std::string describe_signature(const qtop::ClassSignature& sig) {
  std::string s = sig.to_string();
  if (auto label = qtop::reference_label(sig)) s += "  (" + *label + ")";
  return s;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Persistent-homology classification of multiqubit entanglement"};
  app.set_version_flag("--version", std::string(qtop::version()));
  app.require_subcommand(1);

  StateInput classify_in;
  auto* classify = app.add_subcommand("classify", "Print the barcode and class signature of a state");
  classify_in.attach(classify);

  StateInput barcode_in;
  std::string render = "text";
  std::string barcode_out;
  auto* barcode = app.add_subcommand("barcode", "Render a state's barcode as text or SVG");
  barcode_in.attach(barcode);
  barcode->add_option("--render", render, "Output style")->check(CLI::IsMember({"text", "svg"}));
  barcode->add_option("--out", barcode_out, "Output path (default stdout)");

  StateInput distances_in;
  auto* distances = app.add_subcommand("distances", "Print the pairwise semi-distance matrix as CSV");
  distances_in.attach(distances);

  int qubits = 4;
  std::uint64_t count = 0;
  std::uint64_t seed = 1;
  int workers = static_cast<int>(std::max(1u, std::thread::hardware_concurrency()));
  std::string sample_out;
  std::string format = "csv";
  auto* sample = app.add_subcommand("sample", "Monte Carlo class frequencies over random states");
  sample->add_option("--qubits", qubits, "Number of qubits")->required()->check(CLI::Range(2, qtop::kMaxQubits));
  sample->add_option("--count", count, "Number of random states")->required()->check(CLI::PositiveNumber);
  sample->add_option("--seed", seed, "RNG seed (QTOP_SEED overrides)");
  sample->add_option("--workers", workers, "Worker threads")->check(CLI::PositiveNumber);
  sample->add_option("--out", sample_out, "Output path ('-' for stdout)")->required();
  sample->add_option("--format", format, "Table format")->check(CLI::IsMember({"csv", "json"}));

  int bound_qubits = 4;
  auto* bound = app.add_subcommand("bound", "Upper bound on the number of barcode classes");
  bound->add_option("--qubits", bound_qubits, "Number of qubits")->required()->check(CLI::Range(2, 10));

  auto* presets = app.add_subcommand("presets", "List built-in reference states");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : kExitBadInput;
  }

  try {
    if (*classify) {
      const auto result = qtop::classify_state(classify_in.resolve());
      std::cout << "barcode (" << result.barcode.n_points << " qubits):\n"
                << qtop::format_barcode_lines(result.barcode) << "signature: " << describe_signature(result.signature)
                << "\n";
    } else if (*barcode) {
      const auto result = qtop::classify_state(barcode_in.resolve());
      write_output(barcode_out, render == "svg" ? qtop::render_barcode_svg(result.barcode)
                                                : qtop::render_barcode_text(result.barcode));
    } else if (*distances) {
      std::cout << qtop::format_distances_csv(qtop::distance_matrix(distances_in.resolve()));
    } else if (*sample) {
      if (const char* env = std::getenv("QTOP_SEED"); env && *env) {
        try {
          seed = std::stoull(env);
        } catch (const std::exception&) {
          throw qtop::StateFormatError(std::string("QTOP_SEED is not an unsigned integer: ") + env);
        }
      }
      const auto table = qtop::sample_frequencies(qubits, count, seed, workers);
      write_output(sample_out, format == "json" ? qtop::frequency_json(table) : qtop::frequency_csv(table));
    } else if (*bound) {
      std::cout << qtop::class_bound(bound_qubits) << "\n";
    } else if (*presets) {
      for (const auto& name : qtop::preset_names()) std::cout << name << "\n";
    }
  } catch (const qtop::NotGenuinelyEntangled& e) {
    std::cerr << "qtop: " << e.what() << "\n";
    return kExitNotGenuine;
  } catch (const std::exception& e) {
    std::cerr << "qtop: " << e.what() << "\n";
    return kExitBadInput;
  }
  return 0;
}
