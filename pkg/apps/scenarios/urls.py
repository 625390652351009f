from django.urls import path

from .views import InstanceDetailView, InstanceListView

app_name = "scenarios"

urlpatterns = [
    path("", InstanceListView.as_view(), name="instance-list"),
    path("<str:instance_id>/", InstanceDetailView.as_view(), name="instance-detail"),
]
