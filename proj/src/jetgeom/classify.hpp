#pragma once

#include <optional>
#include <string>
#include <vector>

#include "contact.hpp"
#include "jets.hpp"
#include "pencils.hpp"

namespace jetgeom {

// Output classes of the codimension-two classification. The numeric values
// are the class numbers used in reports.
enum class TheoremTag {
  Indeterminate = 0,
  CiTwoQuadrics = 1,
  CurveTimesQuadric = 2,
  ConeSegP1xP2 = 3,
  CurveTimesDegenerateGauss = 4,
  ScrollPn1 = 5,
  QuadricHypersurface = 6,
  Linear = 7,
};

const char* theorem_tag_name(TheoremTag tag);

// Everything the classifier looked at, kept so a prediction is auditable.
struct Evidence {
  Chart chart;
  FundForms forms;
  FubiniReport fubini;
  QuadricPencil pencil;
  PencilClass pclass;
  std::optional<CIWitness> ci;
  std::vector<std::string> diagnostics;
  std::vector<std::string> warnings;
};

struct ClassifyResult {
  TheoremTag tag = TheoremTag::Indeterminate;
  Evidence evidence;
};

/// Local classification at a smooth point of codimension <= 2 (codimension 1
/// and linear inputs route to the single-quadric and linear classes). The
/// result is the locally predicted class; the evidence trail records the
/// basis of the prediction.
ClassifyResult theorem_classify(const VarietySpec& spec, const RatVec& point, int order = 5,
                                bool check_general = false);

ClassifyResult theorem_classify_chart(const Chart& chart, bool check_general = false);

struct ExampleParams {
  int n = 3;
  Rat R = 0, U = 0, V = 0, W = 0;
  std::vector<Rat> lambda;  // defaults to 1..n where needed
  std::vector<Rat> rho;     // defaults to 0

  RatVec lambda_or_default() const;
  RatVec rho_or_default() const;
};

struct GeneratedExample {
  std::optional<VarietySpec> spec;
  std::optional<Chart> chart;
  RatVec suggested_point;  // for spec outputs
};

/// Concrete members of the seven output families. Classes 1, 3, 5, 6, 7 are
/// projective specs; classes 2 and 4 are local charts.
GeneratedExample example_generate(int class_tag, const ExampleParams& params);

/// Chart of a general linear projection of the Plucker-embedded G(2,5) from
/// P^9 to P^8, at the image of a cell origin. The projection center is a
/// fixed rational point verified to lie off the Grassmannian and off the
/// embedded tangent space at the base point.
Chart seg_projection_example(int order = 3);

/// Substitute x_drop = sum coeffs_j x_j (coeffs indexed over the remaining
/// variables in ascending order) into every generator.
VarietySpec hyperplane_slice(const VarietySpec& spec, int drop_var, const RatVec& coeffs);

}  // namespace jetgeom
