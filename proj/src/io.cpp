#include "nqp/io.hpp"

#include <charconv>
#include <fstream>
#include <sstream>
#include <system_error>

#include "nqp/errors.hpp"

namespace nqp {

namespace {

std::ofstream open_out(const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary);  // binary: identical bytes everywhere
  if (!out) throw data_error("cannot open for writing: " + path.string());
  return out;
}

std::ifstream open_in(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw data_error("cannot open: " + path.string());
  return in;
}

struct CsvBody {
  std::map<std::string, std::string> meta;
  std::string header;
  std::vector<std::vector<double>> rows;
};

CsvBody read_csv(const std::filesystem::path& path, std::size_t columns) {
  std::ifstream in = open_in(path);
  CsvBody body;
  std::string line;
  bool saw_header = false;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    if (line[0] == '#') {
      const std::size_t eq = line.find('=');
      if (eq != std::string::npos) {
        std::string key = line.substr(1, eq - 1);
        while (!key.empty() && key.front() == ' ') key.erase(key.begin());
        while (!key.empty() && key.back() == ' ') key.pop_back();
        body.meta[key] = line.substr(eq + 1);
      }
      continue;
    }
    if (!saw_header) {
      body.header = line;
      saw_header = true;
      continue;
    }
    std::vector<double> row;
    row.reserve(columns);
    std::size_t pos = 0;
    while (pos <= line.size()) {
      const std::size_t comma = std::min(line.find(',', pos), line.size());
      row.push_back(parse_double(line.substr(pos, comma - pos)));
      pos = comma + 1;
      if (comma == line.size()) break;
    }
    if (row.size() != columns)
      throw data_error(path.string() + ": line " + std::to_string(line_no) + ": expected " +
                       std::to_string(columns) + " columns");
    body.rows.push_back(std::move(row));
  }
  if (!saw_header) throw data_error(path.string() + ": empty or header-less file");
  return body;
}

std::string require_meta(const CsvBody& body, const std::filesystem::path& path,
                         const std::string& key) {
  const auto it = body.meta.find(key);
  if (it == body.meta.end())
    throw data_error(path.string() + ": missing '# " + key + "=...' metadata");
  return it->second;
}

}  // namespace

std::string format_double(double x) {
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof(buf), x, std::chars_format::general, 17);
  return std::string(buf, res.ptr);
}

double parse_double(const std::string& text) {
  double value = 0.0;
  const char* first = text.data();
  const char* last = text.data() + text.size();
  const auto res = std::from_chars(first, last, value);
  if (res.ec != std::errc{} || res.ptr != last)
    throw data_error("not a number: '" + text + "'");
  return value;
}

void write_dataset_csv(const std::filesystem::path& path, const QuadratureDataset& data) {
  std::ofstream out = open_out(path);
  out << "# nbar=" << format_double(data.params.nbar) << "\n";
  out << "# eta=" << format_double(data.params.eta) << "\n";
  out << "# seed=" << data.seed << "\n";
  out << "# count=" << data.samples.size() << "\n";
  out << "x\n";
  for (double x : data.samples) out << format_double(x) << "\n";
  if (!out) throw data_error("write failed: " + path.string());
}

QuadratureDataset read_dataset_csv(const std::filesystem::path& path) {
  const CsvBody body = read_csv(path, 1);
  QuadratureDataset data;
  data.params.nbar = parse_double(require_meta(body, path, "nbar"));
  data.params.eta = parse_double(require_meta(body, path, "eta"));
  data.seed = static_cast<std::uint64_t>(std::stoull(require_meta(body, path, "seed")));
  const std::size_t count = static_cast<std::size_t>(std::stoull(require_meta(body, path, "count")));
  data.samples.reserve(body.rows.size());
  for (const auto& row : body.rows) data.samples.push_back(row[0]);
  if (data.samples.empty()) throw data_error(path.string() + ": dataset has no samples");
  if (data.samples.size() != count)
    throw data_error(path.string() + ": count metadata does not match row count");
  data.params.validate();
  return data;
}

void write_cf_csv(const std::filesystem::path& path, const RadialCfEstimate& estimate,
                  const std::map<std::string, std::string>& extra) {
  std::ofstream out = open_out(path);
  out << "# N=" << estimate.source_count() << "\n";
  for (const auto& [key, value] : extra) out << "# " << key << "=" << value << "\n";
  out << "b,re,im,sigma2\n";
  for (std::size_t i = 0; i < estimate.radii().size(); ++i) {
    out << format_double(estimate.radii()[i]) << ',' << format_double(estimate.values()[i].real())
        << ',' << format_double(estimate.values()[i].imag()) << ','
        << format_double(estimate.variances()[i]) << "\n";
  }
  if (!out) throw data_error("write failed: " + path.string());
}

RadialCfEstimate read_cf_csv(const std::filesystem::path& path) {
  const CsvBody body = read_csv(path, 4);
  const std::size_t n = static_cast<std::size_t>(std::stoull(require_meta(body, path, "N")));
  std::vector<double> radii, variances;
  std::vector<std::complex<double>> values;
  for (const auto& row : body.rows) {
    radii.push_back(row[0]);
    values.emplace_back(row[1], row[2]);
    variances.push_back(row[3]);
  }
  return RadialCfEstimate(std::move(radii), std::move(values), std::move(variances), n);
}

void write_profile_csv(const std::filesystem::path& path, const QuasiprobProfile& profile,
                       const std::map<std::string, std::string>& extra) {
  std::ofstream out = open_out(path);
  out << "# filter=" << profile.filter_descriptor << "\n";
  out << "# N=" << profile.source_count << "\n";
  for (const auto& [key, value] : extra) out << "# " << key << "=" << value << "\n";
  out << "alpha,p,sigma,significance\n";
  const std::vector<double> sig = profile.significances();
  for (std::size_t i = 0; i < profile.alpha_radii.size(); ++i) {
    out << format_double(profile.alpha_radii[i]) << ',' << format_double(profile.values[i]) << ','
        << format_double(profile.sigmas[i]) << ',' << format_double(sig[i]) << "\n";
  }
  if (!out) throw data_error("write failed: " + path.string());
}

QuasiprobProfile read_profile_csv(const std::filesystem::path& path) {
  const CsvBody body = read_csv(path, 4);
  QuasiprobProfile prof;
  prof.filter_descriptor = require_meta(body, path, "filter");
  prof.source_count = static_cast<std::size_t>(std::stoull(require_meta(body, path, "N")));
  for (const auto& row : body.rows) {
    prof.alpha_radii.push_back(row[0]);
    prof.values.push_back(row[1]);
    prof.sigmas.push_back(row[2]);
  }
  if (prof.alpha_radii.empty()) throw data_error(path.string() + ": profile has no rows");
  return prof;
}

void write_filter_table_csv(const std::filesystem::path& path,
                            const NonclassicalityFilter& filter) {
  std::ofstream out = open_out(path);
  out << "# filter=" << filter.describe() << "\n";
  out << "s,omega1\n";
  const auto& table = filter.table();
  for (std::size_t i = 0; i < table.size(); ++i) {
    out << format_double(static_cast<double>(i) * filter.table_step()) << ','
        << format_double(table[i]) << "\n";
  }
  if (!out) throw data_error("write failed: " + path.string());
}

}  // namespace nqp
