#include <ostream>
#include <stdexcept>

#include "qlbm/csv.hpp"
#include "qlbm/harness.hpp"

namespace qlbm {

namespace {

std::string quoted(const std::filesystem::path& p) { return "'" + p.generic_string() + "'"; }

void plot_case1(std::ostream& out, const std::string& csv, const std::string& png) {
  out << "set output " << png << "\n"
      << "set title 'Discontinuity: normalized pressure and velocity'\n"
      << "set xlabel 'x'\nset ylabel 'p*'\nset y2label 'u'\nset y2tics\nunset logscale\n"
      << "plot " << csv << " using 1:2 with lines title 'p* (sim)', \\\n"
      << "     " << csv << " using 1:4 with lines dashtype 2 title 'p* (exact)', \\\n"
      << "     " << csv << " using 1:3 axes x1y2 with lines title 'u (sim)', \\\n"
      << "     " << csv << " using 1:5 axes x1y2 with lines dashtype 2 title 'u (exact)'\n"
      << "unset y2tics\nunset y2label\n\n";
}

void plot_case2(std::ostream& out, const std::string& csv, const std::string& png) {
  out << "set output " << png << "\n"
      << "set title 'Kolmogorov flow: mean relative RMSE vs viscosity'\n"
      << "set xlabel 'nu'\nset ylabel '<RMSE>'\nunset logscale\nset logscale xy\n"
      << "plot " << csv << " using 1:2 with linespoints title 'decomposition', \\\n"
      << "     1e-5 with lines dashtype 2 title '1e-5', \\\n"
      << "     1e-2 with lines dashtype 3 title 'Carleman closure (reported)'\n"
      << "unset logscale\n\n";
}

void plot_resources(std::ostream& out, const std::string& csv, const std::string& png) {
  out << "set output " << png << "\n"
      << "set title 'Qubits and log10 CNOT count per step'\n"
      << "set xlabel 'n_g'\nset ylabel 'qubits'\nset y2label 'log10 CNOT'\nset y2tics\n"
      << "unset logscale\nset logscale x\n"
      << "plot " << csv << " using 1:3 with lines title 'present (real log2)', \\\n"
      << "     " << csv << " using 1:5 with lines title 'CL2', \\\n"
      << "     " << csv << " using 1:6 with lines title 'CL3', \\\n"
      << "     " << csv << " using 1:7 axes x1y2 with lines dashtype 2 title 'CNOT present', \\\n"
      << "     " << csv << " using 1:8 axes x1y2 with lines dashtype 2 title 'CNOT CL2'\n"
      << "unset y2tics\nunset y2label\nunset logscale\n\n";
}

void plot_generic(std::ostream& out, const std::string& csv, const std::string& png) {
  out << "set output " << png << "\n"
      << "set title " << csv << "\nunset logscale\n"
      << "plot " << csv << " using 1:2 with linespoints notitle\n\n";
}

}  // namespace

void emit_plot_script(const std::vector<std::filesystem::path>& csvs,
                      const std::filesystem::path& script) {
  for (const auto& csv : csvs) {
    if (!std::filesystem::exists(csv)) {
      throw std::runtime_error("cannot emit plot script: missing CSV " + csv.string());
    }
  }
  const auto base = script.parent_path();
  write_file_atomically(script, [&](std::ostream& out) {
    out << "# gnuplot script, regenerate with `qlbm run`; render with `gnuplot "
        << script.filename().string() << "`\n"
        << "set datafile separator ','\n"
        << "set key autotitle columnhead\n"
        << "set terminal pngcairo size 900,600\n\n";
    for (const auto& csv : csvs) {
      auto rel = base.empty() ? csv : csv.lexically_relative(base);
      if (rel.empty()) rel = csv;
      const auto png = quoted(std::filesystem::path(rel).replace_extension(".png"));
      const auto name = csv.filename().string();
      if (name == "case1_profile.csv") {
        plot_case1(out, quoted(rel), png);
      } else if (name == "case2_rmse.csv") {
        plot_case2(out, quoted(rel), png);
      } else if (name.rfind("resources", 0) == 0) {
        plot_resources(out, quoted(rel), png);
      } else {
        plot_generic(out, quoted(rel), png);
      }
    }
  });
}

}  // namespace qlbm
