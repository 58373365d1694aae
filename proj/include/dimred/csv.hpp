#ifndef DIMRED_CSV_HPP
#define DIMRED_CSV_HPP

#include <string>
#include <vector>

#include "dimred/types.hpp"

namespace dimred {

/// Raw parsed CSV: header plus string cells. UTF-8, comma separated, no
/// quoting. Empty cells are kept so callers can report their position.
struct CsvTable {
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;
};

CsvTable read_csv_table(const std::string& path);

/// Loads a dataset with a single integer label column (default "label").
/// Feature columns keep the file order minus the label column.
Dataset load_csv(const std::string& path, const std::string& label_column = "label");

/// Loads features plus every requested label column. Used by the benchmark
/// loader for the three-affect files.
struct MultiLabelData {
  FeatureMatrix features;
  std::vector<std::string> feature_names;
  std::vector<std::pair<std::string, LabelVector>> labels;
};

MultiLabelData load_csv_multi(const std::string& path,
                              const std::vector<std::string>& label_columns);

/// Writes a dataset as CSV: feature columns in order, then the label column.
/// Reals are emitted with 17 significant digits so files round-trip exactly.
void save_csv(const Dataset& ds, const std::string& path,
              const std::string& label_column = "label");

std::string format_csv(const Dataset& ds, const std::string& label_column = "label");

}  // namespace dimred

#endif  // DIMRED_CSV_HPP
