class Shape {
 public:
  int sides = 4;
  double area() {
    return 0;
  }
};

class Square : public Shape {
 public:
  int corners() {
    return sides;
  }
};
