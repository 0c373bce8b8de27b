class Order {
 public:
  int quantity = 0;
};

class Shipping {
 public:
  int carrier = 0;
  double shippingCost(double weight) {
    double cost = weight * 1.5;
    cost = cost + 4.0;
    return cost;
  }
};
