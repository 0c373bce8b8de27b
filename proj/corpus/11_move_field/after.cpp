class Engine {
 public:
  int cylinders = 4;
};

class Car {
 public:
  int doors = 4;
  int horsepower = 0;
};
