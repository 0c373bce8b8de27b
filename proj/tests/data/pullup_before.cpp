struct Base {
  int id = 0;
};

struct Derived : Base {
  double weight = 1.0;
  int tag = 7;
};
