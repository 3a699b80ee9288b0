#include "xasim/spectrum.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <limits>
#include <sstream>

namespace xasim {

namespace {

std::string format_g17(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

void check_table(const SpectrumTable& t) {
  const Eigen::Index n = t.omega.size();
  if (t.im_g.size() != n || t.c_eta.size() != n || t.sigma.size() != n ||
      t.stderr_sigma.size() != n ||
      static_cast<Eigen::Index>(t.n_samples.size()) != n) {
    throw validation_error("spectrum table columns have mismatched lengths");
  }
}

}  // namespace

void atomic_write_text(const std::filesystem::path& path,
                       const std::string& content) {
  const std::filesystem::path tmp = path.string() + ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw validation_error("cannot write " + tmp.string());
    out << content;
  }
  std::filesystem::rename(tmp, path);
}

void write_spectrum_csv(const SpectrumTable& table,
                        const std::filesystem::path& path) {
  check_table(table);
  std::ostringstream out;
  out << "omega,im_g,c_eta,sigma,stderr,n_samples\n";
  for (Eigen::Index i = 0; i < table.omega.size(); ++i) {
    out << format_g17(table.omega(i)) << ',' << format_g17(table.im_g(i))
        << ',' << format_g17(table.c_eta(i)) << ','
        << format_g17(table.sigma(i)) << ','
        << format_g17(table.stderr_sigma(i)) << ','
        << table.n_samples[static_cast<std::size_t>(i)] << '\n';
  }
  atomic_write_text(path, out.str());
}

SpectrumTable read_spectrum_csv(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw validation_error("cannot open spectrum CSV: " + path.string());
  std::string line;
  if (!std::getline(in, line) ||
      line != "omega,im_g,c_eta,sigma,stderr,n_samples") {
    throw validation_error("unexpected spectrum CSV header in " + path.string());
  }
  std::vector<std::array<double, 5>> rows;
  std::vector<long long> samples;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    std::array<double, 5> row{};
    long long n = 0;
    std::istringstream ss(line);
    std::string field;
    for (int c = 0; c < 5; ++c) {
      if (!std::getline(ss, field, ',')) {
        throw validation_error("short row in spectrum CSV");
      }
      row[static_cast<std::size_t>(c)] = std::stod(field);
    }
    if (!std::getline(ss, field)) {
      throw validation_error("short row in spectrum CSV");
    }
    n = std::stoll(field);
    rows.push_back(row);
    samples.push_back(n);
  }
  SpectrumTable t;
  const Eigen::Index n = static_cast<Eigen::Index>(rows.size());
  t.omega.resize(n);
  t.im_g.resize(n);
  t.c_eta.resize(n);
  t.sigma.resize(n);
  t.stderr_sigma.resize(n);
  for (Eigen::Index i = 0; i < n; ++i) {
    const auto& r = rows[static_cast<std::size_t>(i)];
    t.omega(i) = r[0];
    t.im_g(i) = r[1];
    t.c_eta(i) = r[2];
    t.sigma(i) = r[3];
    t.stderr_sigma(i) = r[4];
  }
  t.n_samples = std::move(samples);
  return t;
}

CompareReport compare_spectra(const SpectrumTable& a, const SpectrumTable& b,
                              double z_threshold) {
  check_table(a);
  check_table(b);
  if (a.omega.size() != b.omega.size()) {
    throw validation_error("spectrum grids have different sizes");
  }
  for (Eigen::Index i = 0; i < a.omega.size(); ++i) {
    if (a.omega(i) != b.omega(i)) {
      throw validation_error("spectrum grids do not match");
    }
  }
  CompareReport report;
  report.threshold = z_threshold;
  report.n_points = static_cast<std::size_t>(a.omega.size());
  report.z.resize(a.omega.size());
  double sum_sq = 0.0;
  for (Eigen::Index i = 0; i < a.omega.size(); ++i) {
    const double dev = a.sigma(i) - b.sigma(i);
    report.max_abs_dev = std::max(report.max_abs_dev, std::abs(dev));
    sum_sq += dev * dev;
    const double se = std::hypot(a.stderr_sigma(i), b.stderr_sigma(i));
    double z = 0.0;
    if (se > 0.0) {
      z = dev / se;
    } else if (dev != 0.0) {
      z = std::numeric_limits<double>::infinity();
    }
    report.z(i) = z;
    report.max_abs_z = std::max(report.max_abs_z, std::abs(z));
    if (std::abs(z) > z_threshold) ++report.n_over_threshold;
  }
  report.l2_dev = std::sqrt(sum_sq);
  return report;
}

}  // namespace xasim
