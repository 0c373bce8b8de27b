class Engine {
 public:
  int horsepower = 0;
  int cylinders = 4;
};

class Car {
 public:
  int doors = 4;
};
