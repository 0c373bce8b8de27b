class Gauge {
  double value = 1.0;
 public:
  void scale(double factor) {
    value = value * factor;
  }
  double read() {
    return value;
  }
};
