from .data_loader import DataLoader
