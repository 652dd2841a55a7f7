#include "quivemb/fixtures.hpp"

namespace quivemb::fixtures {

Quiver kronecker3() { return Quiver::kronecker(3); }

Representation kronecker_m(const Field& field) {
  std::vector<Matrix> mats{
      Matrix::from_ints(field, {{1, 0, 0}, {0, 0, 0}, {0, 0, -1}}),
      Matrix::from_ints(field, {{0, 0, 0}, {1, 0, 0}, {0, 1, 0}}),
      Matrix::from_ints(field, {{0, 1, 0}, {0, 0, 1}, {0, 0, 0}}),
  };
  return Representation(kronecker3(), field, {3, 3}, std::move(mats));
}

Representation kronecker_pi(const Field& field) {
  std::vector<Matrix> mats{
      Matrix::from_ints(field, {{1}, {0}, {0}}),
      Matrix::from_ints(field, {{0}, {1}, {0}}),
      Matrix::from_ints(field, {{0}, {0}, {1}}),
  };
  return Representation(kronecker3(), field, {1, 3}, std::move(mats));
}

Morphism kronecker_g(const Field& field) {
  std::vector<Matrix> mats{
      Matrix::from_ints(field, {{0, 1}, {1, 0}, {0, 0}, {1, 0}, {0, 0}, {0, 1}}),
      Matrix::from_ints(field, {{0, 0, 1, 1, 0, 0},
                                {0, 0, 0, 0, 1, 0},
                                {0, 1, 0, 0, 0, 0},
                                {1, 0, 0, 0, 0, 0},
                                {0, 1, 0, 0, 0, 1},
                                {0, 0, 0, -1, 0, 0}}),
  };
  return Morphism(power(kronecker_pi(field), 2), power(kronecker_m(field), 2), std::move(mats));
}

Quiver d4() { return Quiver(4, {{0, 1}, {0, 2}, {0, 3}}); }

Representation d4_p1(const Field& field) {
  std::vector<Matrix> mats{
      Matrix::from_ints(field, {{1}}),
      Matrix::from_ints(field, {{1}}),
      Matrix::from_ints(field, {{1}}),
  };
  return Representation(d4(), field, {1, 1, 1, 1}, std::move(mats));
}

Representation d4_x(const Field& field) {
  std::vector<Matrix> mats{
      Matrix::from_ints(field, {{1, 0}}),
      Matrix::from_ints(field, {{0, 1}}),
      Matrix::from_ints(field, {{1, 1}}),
  };
  return Representation(d4(), field, {2, 1, 1, 1}, std::move(mats));
}

}  // namespace quivemb::fixtures
