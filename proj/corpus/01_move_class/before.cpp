namespace geo {
class Point {
 public:
  double x = 0;
  double y = 0;
  double dot(const Point& other) {
    return x * other.x + y * other.y;
  }
};
class Segment {
 public:
  int length = 0;
};
}  // namespace geo
