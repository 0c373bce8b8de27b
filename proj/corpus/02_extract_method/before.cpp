class Invoice {
 public:
  double total(double net, double rate) {
    double tax = net * rate;
    tax = tax + 0.5;
    double gross = net + tax;
    return gross;
  }
};
