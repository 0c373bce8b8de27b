class Shape {
 public:
  double area() {
    return 0;
  }
};

class Square : public Shape {
 public:
  int sides = 4;
  int corners() {
    return sides;
  }
};
